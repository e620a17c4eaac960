"""Cutoff evaluation of the indexed Ackermann hierarchy A_a(k, b).

The recursion is

    A_0(k, b)     = k^b
    A_{a+1}(k, 0) = A_a^k(k, .)(0)
    A_{a+1}(k, b+1) = A_a^k(k, .)(A_{a+1}(k, b))

with k >= 2 fixed.  Values explode almost immediately (A_2(2, 1) already
dwarfs 2^65536), so every evaluator here takes an explicit cutoff bound and
reports an exceeds-bound marker instead of materializing anything larger.
Aborting early is sound because A_a(k, .) is strictly increasing and
inflationary, so any intermediate above the bound forces the final value
above it too.
"""

from __future__ import annotations


class ExceedsBound:
    """Singleton marker: the true value is strictly larger than the bound."""

    __slots__ = ()
    _instance: "ExceedsBound | None" = None

    def __new__(cls) -> "ExceedsBound":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "ExceedsBound"


EXCEEDS = ExceedsBound()

BoundedValue = "int | ExceedsBound"

#: Generous desk-scale ceiling: ~100 000 decimal digits.
DEFAULT_BOUND = 10 ** 100_000


def require_base(k: int) -> None:
    if k < 2:
        raise ValueError(f"base index k must be >= 2, got {k}")


def bounded_pow(base: int, exp: int, bound: int) -> "int | ExceedsBound":
    """base**exp if it is <= bound, else the exceeds marker.

    Square-and-multiply, most significant bit first; the partial result is a
    power of ``base`` with a prefix of the exponent, so it only grows, and we
    can abort as soon as it passes the bound.  No intermediate ever exceeds
    bound**2 * base.
    """
    if base >= 2 and exp >= bound.bit_length():
        return EXCEEDS  # base**exp >= 2**exp > bound already
    result = 1
    for i in range(exp.bit_length() - 1, -1, -1):
        result = result * result
        if (exp >> i) & 1:
            result = result * base
        if result > bound:
            return EXCEEDS
    return result if result <= bound else EXCEEDS


def ack_eval(a: int, k: int, b: int, bound: int) -> "int | ExceedsBound":
    """A_a(k, b) under cutoff: exact value if <= bound, else the marker."""
    require_base(k)
    if a < 0 or b < 0 or bound < 0:
        raise ValueError("a, b and bound must be non-negative")
    if a == 0:
        return bounded_pow(k, b, bound)
    # Climb from A_a(k, 0); each successor step is a k-fold iteration of the
    # level below.  Every step at least exponentiates the current value, so
    # the loop passes any bound after a handful of iterations even when b is
    # astronomically large.
    value = ack_iter(a - 1, k, 0, k, bound)
    step = 0
    while step < b:
        if isinstance(value, ExceedsBound):
            return EXCEEDS
        value = ack_iter(a - 1, k, value, k, bound)
        step += 1
    return value


def ack_iter(a: int, k: int, x: int, times: int, bound: int) -> "int | ExceedsBound":
    """times-fold composition of A_a(k, .) applied to x, under cutoff."""
    require_base(k)
    if a < 0 or x < 0 or times < 0 or bound < 0:
        raise ValueError("a, x, times and bound must be non-negative")
    value: "int | ExceedsBound" = x
    step = 0
    while step < times:
        if value > bound:
            return EXCEEDS  # A_a(k, .) is inflationary
        value = ack_eval(a, k, value, bound)
        if isinstance(value, ExceedsBound):
            return EXCEEDS
        step += 1
    return value if value <= bound else EXCEEDS
