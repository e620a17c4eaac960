"""The three Goodstein processes and their recorded traces.

``classic`` is the original exponential process (hereditary base-k digits,
every k replaced by k+1, minus one); ``unnested`` and ``nested`` use the
Ackermannian base-change operators instead.  Step k of a run rewrites base
k+2 to k+3, so the first normal form is taken at base 2.  Runs never raise
on explosion: a value passing the cutoff bound truncates the trace with a
recorded reason.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional

from .ackmath import DEFAULT_BOUND, EXCEEDS, ExceedsBound, bounded_pow, require_base
from .base_change import bc_nested, bc_unnested
from .normal_form import render_term, to_tree

VARIANTS = ("classic", "unnested", "nested")


# --- hereditary exponential representation (classic variant) --------------


def _digits(m: int, k: int) -> list[tuple[int, int]]:
    """Nonzero base-k digits of m as (exponent, digit), largest first."""
    out = []
    exponent = 0
    while m > 0:
        m, digit = divmod(m, k)
        if digit:
            out.append((exponent, digit))
        exponent += 1
    out.reverse()
    return out


def hereditary_rewrite(m: int, k: int, bound: int) -> "int | ExceedsBound":
    """m in hereditary base-k form with every k replaced by k+1, under cutoff."""
    require_base(k)
    if m < 0:
        raise ValueError("m must be non-negative")
    total = 0
    for exponent, digit in _digits(m, k):
        image = hereditary_rewrite(exponent, k, bound)
        if isinstance(image, ExceedsBound):
            return EXCEEDS  # (k+1)^image alone would already exceed
        power = bounded_pow(k + 1, image, bound)
        if isinstance(power, ExceedsBound):
            return EXCEEDS
        total += power * digit
        if total > bound:
            return EXCEEDS
    return total


def render_hereditary(m: int, k: int) -> str:
    """Hereditary base-k text, e.g. 20 at base 2 -> ``2^(2^2) + 2^2``."""
    if m == 0:
        return "0"
    parts = []
    for exponent, digit in _digits(m, k):
        if exponent == 0:
            parts.append(str(digit))
            continue
        if exponent == 1:
            text = str(k)
        else:
            text = f"{k}^({render_hereditary(exponent, k)})"
        parts.append(text if digit == 1 else f"{text}*{digit}")
    return " + ".join(parts)


# --- single step and full runs --------------------------------------------


def step(variant: str, value: int, k: int, bound: int) -> "int | ExceedsBound":
    """One Goodstein step at base k: base-change then subtract one."""
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    require_base(k)
    if value == 0:
        return 0
    if variant == "classic":
        rewrite = hereditary_rewrite
    elif variant == "unnested":
        rewrite = bc_unnested
    else:
        rewrite = bc_nested
    # Evaluate at bound+1: an image of exactly bound+1 still yields an exact
    # in-bound value after the decrement.
    image = rewrite(value, k, bound + 1)
    if isinstance(image, ExceedsBound):
        return EXCEEDS
    return image - 1


@dataclass(frozen=True)
class StepRecord:
    k: int
    base: int  # always k + 2
    value: "int | ExceedsBound"
    normal_form: str
    ordinal: Optional[str]


@dataclass(frozen=True)
class GoodsteinTrace:
    variant: str
    start: int
    steps: tuple[StepRecord, ...]
    terminated: bool
    truncated_reason: Optional[str]  # "max_steps" | "value_too_large"


def _describe(variant: str, value: int, base: int, with_ordinals: bool) -> tuple[str, Optional[str]]:
    if variant == "classic":
        return render_hereditary(value, base), None
    mode = "unnested" if variant == "unnested" else "nested"
    text = render_term(to_tree(value, base, mode))
    if not with_ordinals:
        return text, None
    from .ordinal_map import chi, psi  # deferred: ordinal_map runs steps too
    from .ordinals import format_ordinal

    assign = psi if variant == "unnested" else chi
    return text, format_ordinal(assign(base, value))


def run(
    variant: str,
    start: int,
    max_steps: int,
    bound: int = DEFAULT_BOUND,
    with_ordinals: bool = False,
) -> GoodsteinTrace:
    """Run a Goodstein process from ``start``, recording at most ``max_steps`` steps."""
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    if max_steps < 1:
        raise ValueError("max_steps must be >= 1")
    if start < 0:
        raise ValueError("start must be non-negative")
    records: list[StepRecord] = []
    value = start
    terminated = False
    reason: Optional[str] = None
    while True:
        base = len(records) + 2
        normal_form, ordinal = _describe(variant, value, base, with_ordinals)
        records.append(StepRecord(len(records), base, value, normal_form, ordinal))
        if value == 0:
            terminated = True
            break
        if len(records) >= max_steps:
            reason = "max_steps"
            break
        nxt = step(variant, value, base, bound)
        if isinstance(nxt, ExceedsBound):
            records.append(StepRecord(len(records), base + 1, EXCEEDS, "", None))
            reason = "value_too_large"
            break
        value = nxt
    return GoodsteinTrace(variant, start, tuple(records), terminated, reason)


# --- JSON serialization ----------------------------------------------------


def trace_to_dict(trace: GoodsteinTrace) -> dict:
    return {
        "variant": trace.variant,
        "start": str(trace.start),
        "terminated": trace.terminated,
        "truncated_reason": trace.truncated_reason,
        "steps": [
            {
                "k": record.k,
                "base": record.base,
                "value": "too_large" if isinstance(record.value, ExceedsBound) else str(record.value),
                "normal_form": record.normal_form,
                "ordinal": record.ordinal,
            }
            for record in trace.steps
        ],
    }


def trace_to_json(trace: GoodsteinTrace, indent: "int | None" = None) -> str:
    return json.dumps(trace_to_dict(trace), indent=indent)
