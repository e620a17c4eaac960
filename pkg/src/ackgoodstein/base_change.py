"""Base-change operators c[k <- k+1] on numbers, via their normal forms.

The unnested operator rewrites b and n of c = A_a(k, b) * m + n and re-reads
the form at base k+1; the nested operator additionally rewrites the level
index a.  Images inflate enormously (27[3 <- 4] is already 4^256), so both
operators honour a cutoff bound and report an exceeds marker instead of
failing.
"""

from __future__ import annotations

from functools import lru_cache

from .ackmath import EXCEEDS, ExceedsBound, ack_eval, require_base
from .normal_form import Mode, decompose


def bc_unnested(c: int, k: int, bound: int) -> "int | ExceedsBound":
    """c[k <- k+1] with the level index a kept fixed."""
    return _base_change(c, k, bound, False)


def bc_nested(c: int, k: int, bound: int) -> "int | ExceedsBound":
    """c[k <- k+1] with the level index a rewritten recursively as well."""
    return _base_change(c, k, bound, True)


def base_change(c: int, k: int, mode: Mode, bound: int) -> "int | ExceedsBound":
    return _base_change(c, k, bound, mode == "nested")


@lru_cache(maxsize=None)
def _base_change(c: int, k: int, bound: int, nested: bool) -> "int | ExceedsBound":
    require_base(k)
    if c < 0 or bound < 0:
        raise ValueError("c and bound must be non-negative")
    # Peel the tail chain iteratively; each exceeds-check is sound because
    # A_a(k+1, .) is inflationary in both the level and the argument.
    total = 0
    rest = c
    while rest > 0:
        a, b, m, n = decompose(rest, k)
        if nested:
            level = _base_change(a, k, bound, True)
            if isinstance(level, ExceedsBound):
                return EXCEEDS
        else:
            level = a
        arg = _base_change(b, k, bound, nested)
        if isinstance(arg, ExceedsBound):
            return EXCEEDS
        head = ack_eval(level, k + 1, arg, bound)
        if isinstance(head, ExceedsBound):
            return EXCEEDS
        total += head * m
        if total > bound:
            return EXCEEDS
        rest = n
    return total
