"""Ackermannian normal forms, base change, Goodstein processes and the
ordinal machinery that proves them terminating."""

from .ackmath import DEFAULT_BOUND, EXCEEDS, ExceedsBound, ack_eval, ack_iter, bounded_pow
from .base_change import base_change, bc_nested, bc_unnested
from .goodstein import (
    GoodsteinTrace,
    StepRecord,
    hereditary_rewrite,
    run,
    step,
    trace_to_dict,
    trace_to_json,
)
from .normal_form import (
    ZERO as ZERO_TERM,
    AckTerm,
    Node,
    Zero,
    decompose,
    eval_tree,
    is_normal_form,
    render_term,
    to_tree,
    tree_cmp,
)
from .ordinal_map import chi, o_value, psi
from .ordinals import (
    ZERO as ZERO_ORDINAL,
    Eps,
    OmegaPow,
    Ordinal,
    OrdinalParseError,
    add,
    cmp,
    descent,
    eps,
    format_ordinal,
    from_nat,
    fund,
    is_canonical,
    omega_pow,
    omega_tower,
    parse_ordinal,
    random_ordinal,
    step_down_reachable,
    times,
)

__all__ = [name for name in dir() if not name.startswith("_")]
