"""Ordinal assignments for Ackermannian normal forms.

``psi(k, c)`` sends c = A_a(k, b) * m + n to w^(e_a + psi(k, b)) * m +
psi(k, n), landing below e_omega (every epsilon subscript is a natural).
``chi(k, c)`` additionally maps the level index through itself,
w^(e_chi(k, a) + chi(k, b)) * m + chi(k, n), landing below phi_2(0).

Both maps are strictly monotone and invariant under the matching
base-change operator, which makes ``o_value`` a strictly decreasing
termination measure along Goodstein runs.
"""

from __future__ import annotations

from functools import lru_cache

from .ackmath import DEFAULT_BOUND, EXCEEDS, ExceedsBound, require_base
from .normal_form import decompose
from .ordinals import ZERO, Ordinal, add, eps, from_nat, omega_pow

Variant = str  # "unnested" | "nested"


@lru_cache(maxsize=None)
def psi(k: int, c: int) -> Ordinal:
    """The unnested assignment psi_k(c) < e_omega."""
    return _assign(k, c, nested=False)


@lru_cache(maxsize=None)
def chi(k: int, c: int) -> Ordinal:
    """The nested assignment chi_k(c) < phi_2(0).

    The tail recurses through chi itself, keeping the recursion
    self-contained (for unnested level indices the two maps agree anyway).
    """
    return _assign(k, c, nested=True)


def _assign(k: int, c: int, nested: bool) -> Ordinal:
    require_base(k)
    if c < 0:
        raise ValueError("c must be non-negative")
    if c == 0:
        return ZERO
    # The tail chain is peeled iteratively; successive heads are strictly
    # decreasing (each tail is below its head value), so the monomials can be
    # assembled directly in canonical order.
    monomials = []
    rest = c
    while rest > 0:
        a, b, m, n = decompose(rest, k)
        if nested:
            level = eps(chi(k, a))
            head_term = omega_pow(add(level, chi(k, b)))
        else:
            level = eps(from_nat(a))
            head_term = omega_pow(add(level, psi(k, b)))
        head, coeff = head_term.monomials[0]
        monomials.append((head, coeff * m))
        rest = n
    return Ordinal(tuple(monomials))


def o_value(start: int, k_index: int, variant: Variant, bound: int = DEFAULT_BOUND) -> "Ordinal | ExceedsBound":
    """The termination measure of the k-th Goodstein value of ``start``.

    psi_{k+2}(b_k(start)) for the unnested process, chi_{k+2}(c_k(start))
    for the nested one; the exceeds marker when the k-th value is not
    materializable under ``bound``.
    """
    from .goodstein import step  # deferred: goodstein also uses psi/chi

    if variant not in ("unnested", "nested"):
        raise ValueError(f"no ordinal assignment for variant {variant!r}")
    value: "int | ExceedsBound" = start
    for index in range(k_index):
        value = step(variant, value, index + 2, bound)
        if isinstance(value, ExceedsBound):
            return EXCEEDS
    assign = psi if variant == "unnested" else chi
    return assign(k_index + 2, value)
