"""Ordinal notations below phi_2(0).

Terms are sums of monomials head * coeff with strictly decreasing heads and
positive coefficients.  A head is either w^e (an omega power) or e_g (an
epsilon number, the g-th fixed point of x -> w^x).  Canonical form forbids
w^e when e is a bare epsilon atom, since w^(e_g) = e_g; the constructors
enforce this collapse, so everything built through them stays canonical.

Besides comparison and (left-absorbing) addition, the module provides the
standard fundamental sequences a[k] below phi_2(0), omega towers, the
iterated descent a > a[1] > a[1][2] > ..., and a text grammar:

    term := "0" | mono ("+" mono)* ;
    mono := nat | head ("*" nat)? ;
    head := "1" | "w" | "w^(" term ")" | "e(" term ")" ;

with "1" = w^0 and "w" = w^1.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Literal, Union


@dataclass(frozen=True)
class OmegaPow:
    exponent: "Ordinal"


@dataclass(frozen=True)
class Eps:
    index: "Ordinal"


Head = Union[OmegaPow, Eps]


@dataclass(frozen=True)
class Ordinal:
    monomials: tuple[tuple[Head, int], ...] = field(default=())

    def __lt__(self, other: "Ordinal") -> bool:
        return _cmp(self, other) < 0

    def __le__(self, other: "Ordinal") -> bool:
        return _cmp(self, other) <= 0

    def __gt__(self, other: "Ordinal") -> bool:
        return _cmp(self, other) > 0

    def __ge__(self, other: "Ordinal") -> bool:
        return _cmp(self, other) >= 0

    def __repr__(self) -> str:
        return f"Ordinal[{format_ordinal(self)}]"


ZERO = Ordinal()
ONE = Ordinal(((OmegaPow(ZERO), 1),))


class OrdinalParseError(ValueError):
    pass


def from_nat(n: int) -> Ordinal:
    if n < 0:
        raise ValueError("ordinals cannot be negative")
    if n == 0:
        return ZERO
    return Ordinal(((OmegaPow(ZERO), n),))


def _head_cmp(left: Head, right: Head) -> int:
    if isinstance(left, OmegaPow) and isinstance(right, OmegaPow):
        return _cmp(left.exponent, right.exponent)
    if isinstance(left, Eps) and isinstance(right, Eps):
        return _cmp(left.index, right.index)
    # e_g = w^(e_g): compare the epsilon atom, as a term, against the other
    # exponent.  Canonical terms never make the two heads equal.
    if isinstance(left, Eps):
        return _cmp(Ordinal(((left, 1),)), right.exponent)
    return _cmp(left.exponent, Ordinal(((right, 1),)))


def _cmp(left: Ordinal, right: Ordinal) -> int:
    for (lh, lm), (rh, rm) in zip(left.monomials, right.monomials):
        c = _head_cmp(lh, rh)
        if c:
            return c
        if lm != rm:
            return -1 if lm < rm else 1
    if len(left.monomials) != len(right.monomials):
        return -1 if len(left.monomials) < len(right.monomials) else 1
    return 0


def cmp(left: Ordinal, right: Ordinal) -> int:
    """-1/0/1 comparison of canonical terms (total ordinal order)."""
    require_canonical(left)
    require_canonical(right)
    return _cmp(left, right)


def is_canonical(a: Ordinal) -> bool:
    prev: "Head | None" = None
    for head, coeff in a.monomials:
        if coeff < 1:
            return False
        if isinstance(head, OmegaPow):
            e = head.exponent
            if not is_canonical(e):
                return False
            # w^(e_g) collapses to the atom e_g; its presence is non-canonical.
            if len(e.monomials) == 1 and e.monomials[0][1] == 1 and isinstance(e.monomials[0][0], Eps):
                return False
        else:
            if not is_canonical(head.index):
                return False
        if prev is not None and _head_cmp(prev, head) <= 0:
            return False
        prev = head
    return True


def require_canonical(a: Ordinal) -> None:
    if not is_canonical(a):
        raise ValueError(f"non-canonical ordinal term: {a.monomials!r}")


def add(left: Ordinal, right: Ordinal) -> Ordinal:
    """Ordinal sum: monomials of the left absorbed below the right's head."""
    if not right.monomials:
        return left
    lead = right.monomials[0][0]
    keep = []
    for head, coeff in left.monomials:
        c = _head_cmp(head, lead)
        if c > 0:
            keep.append((head, coeff))
        elif c == 0:
            merged = (head, coeff + right.monomials[0][1])
            return Ordinal(tuple(keep) + (merged,) + right.monomials[1:])
        else:
            break
    return Ordinal(tuple(keep) + right.monomials)


def eps(index: Ordinal) -> Ordinal:
    return Ordinal(((Eps(index), 1),))


def omega_pow(exponent: Ordinal) -> Ordinal:
    """w^exponent, collapsing the fixed point w^(e_g) = e_g."""
    mons = exponent.monomials
    if len(mons) == 1 and mons[0][1] == 1 and isinstance(mons[0][0], Eps):
        return exponent
    return Ordinal(((OmegaPow(exponent), 1),))


def times(a: Ordinal, m: int) -> Ordinal:
    """a * m for a natural m (m = 0 gives 0)."""
    if m < 0:
        raise ValueError("coefficient must be non-negative")
    if m == 0 or not a.monomials:
        return ZERO
    head, coeff = a.monomials[0]
    return Ordinal(((head, coeff * m),) + a.monomials[1:])


def omega_tower(k: int, a: Ordinal) -> Ordinal:
    """k-fold omega exponentiation w^(w^(...^a))."""
    for _ in range(k):
        a = omega_pow(a)
    return a


def is_successor(a: Ordinal) -> bool:
    return bool(a.monomials) and a.monomials[-1][0] == OmegaPow(ZERO)


def pred(a: Ordinal) -> Ordinal:
    """a - 1 for successor a."""
    if not is_successor(a):
        raise ValueError("predecessor of a non-successor ordinal")
    head, coeff = a.monomials[-1]
    if coeff == 1:
        return Ordinal(a.monomials[:-1])
    return Ordinal(a.monomials[:-1] + ((head, coeff - 1),))


def fund(a: Ordinal, k: int) -> Ordinal:
    """The k-th member a[k] of the standard fundamental sequences.

    Sums and coefficients recurse on the last monomial; w^b heads step down
    through the exponent; e_b heads unfold into omega towers.  For a > 0 the
    result is strictly below a and weakly increases with k.
    """
    require_canonical(a)
    if k < 0:
        raise ValueError("k must be non-negative")
    return _fund(a, k)


def _fund(a: Ordinal, k: int) -> Ordinal:
    if not a.monomials:
        return ZERO
    head, coeff = a.monomials[-1]
    if len(a.monomials) > 1 or coeff > 1:
        prefix = a.monomials[:-1]
        if coeff > 1:
            prefix = prefix + ((head, coeff - 1),)
        return add(Ordinal(prefix), _fund(Ordinal(((head, 1),)), k))
    if isinstance(head, OmegaPow):
        e = head.exponent
        if not e.monomials:
            return ZERO  # w^0 = 1, its step-down is 0
        if is_successor(e):
            return times(omega_pow(pred(e)), k)
        return omega_pow(_fund(e, k))
    g = head.index
    if not g.monomials:
        return omega_tower(k, ONE)
    if is_successor(g):
        return omega_tower(k, add(eps(pred(g)), ONE))
    return eps(_fund(g, k))


def step_down_reachable(a: Ordinal, b: Ordinal, k: int, max_steps: int) -> Literal["yes", "no", "unknown"]:
    """Whether b is reachable from a by iterating .[k] (a bounded oracle).

    The chain is strictly decreasing, so passing below b settles "no"; the
    step cap makes the check total, answering "unknown" when exhausted.
    """
    require_canonical(a)
    require_canonical(b)
    current = a
    for step in range(max_steps + 1):
        c = _cmp(current, b)
        if c == 0:
            return "yes"
        if c < 0:
            return "no"
        if step == max_steps:
            break
        current = _fund(current, k)
    return "unknown"


def descent(a: Ordinal, max_steps: int) -> list[Ordinal]:
    """The sequence a, a[1], a[1][2], ... for up to max_steps applications."""
    require_canonical(a)
    chain = [a]
    current = a
    for n in range(1, max_steps + 1):
        if not current.monomials:
            break
        current = _fund(current, n)
        chain.append(current)
    return chain


# --- text grammar ---------------------------------------------------------


def format_ordinal(a: Ordinal, _nested: bool = False) -> str:
    if not a.monomials:
        return "0"
    sep = "+" if _nested else " + "
    return sep.join(_format_monomial(head, coeff) for head, coeff in a.monomials)


def _format_monomial(head: Head, coeff: int) -> str:
    if isinstance(head, OmegaPow):
        e = head.exponent
        if not e.monomials:
            return str(coeff)
        if e == ONE:
            text = "w"
        else:
            text = f"w^({format_ordinal(e, True)})"
    else:
        text = f"e({format_ordinal(head.index, True)})"
    return text if coeff == 1 else f"{text}*{coeff}"


class _Parser:
    def __init__(self, text: str) -> None:
        self.text = text
        self.pos = 0

    def error(self, message: str) -> "OrdinalParseError":
        return OrdinalParseError(f"{message} at position {self.pos}")

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            raise self.error(f"expected {ch!r}")
        self.pos += 1

    def nat(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise self.error("expected a natural number")
        return int(self.text[start : self.pos])

    def term(self) -> Ordinal:
        total = self.monomial()
        while self.peek() == "+":
            self.pos += 1
            total = add(total, self.monomial())
        return total

    def monomial(self) -> Ordinal:
        ch = self.peek()
        if ch.isdigit():
            value = from_nat(self.nat())
        elif ch == "w":
            self.pos += 1
            if self.peek() == "^":
                self.pos += 1
                self.expect("(")
                value = omega_pow(self.term())
                self.expect(")")
            else:
                value = omega_pow(ONE)
        elif ch == "e":
            self.pos += 1
            self.expect("(")
            value = eps(self.term())
            self.expect(")")
        else:
            raise self.error("expected a monomial")
        if self.peek() == "*":
            self.pos += 1
            value = times(value, self.nat())
        return value


def parse_ordinal(text: str) -> Ordinal:
    parser = _Parser(text)
    result = parser.term()
    parser.skip_ws()
    if parser.pos != len(text):
        raise parser.error("trailing input")
    return result


# --- random terms for the sampled property suites -------------------------


def random_ordinal(rng: random.Random, depth: int = 4, eps_depth: int = 2, max_coeff: int = 5) -> Ordinal:
    """A canonical term of bounded depth, coefficient size and eps nesting."""
    if depth == 0 or rng.random() < 0.25:
        return from_nat(rng.randrange(0, 4))
    total = ZERO
    for _ in range(rng.randrange(1, 4)):
        if eps_depth > 0 and rng.random() < 0.4:
            head = eps(random_ordinal(rng, depth - 1, eps_depth - 1, max_coeff))
        else:
            head = omega_pow(random_ordinal(rng, depth - 1, eps_depth, max_coeff))
        total = add(total, times(head, rng.randrange(1, max_coeff + 1)))
    return total
