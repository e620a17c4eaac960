"""Ackermann k-normal forms.

Every c > 0 has a unique representation c = A_a(k, b) * m + n with

    (1) the identity itself,
    (2) A_a(k, 0) <= c < A_{a+1}(k, 0)   (a maximal),
    (3) A_a(k, b) <= c < A_a(k, b+1),
    (4) n < A_a(k, b).

``decompose`` finds the tuple (a, b, m, n); ``to_tree`` applies it
hereditarily to b and n (and, in nested mode, to the level index a itself),
producing an immutable term tree.  ``eval_tree`` reads a tree back at any
base, ``is_normal_form`` re-checks the four conditions at every node.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Literal, Union

from .ackmath import EXCEEDS, ExceedsBound, ack_eval, ack_iter, require_base

Mode = Literal["unnested", "nested"]

#: Evaluation cap used when a node value must be materialized for validation.
VALIDATION_CAP = 10 ** 100_000


@dataclass(frozen=True)
class Zero:
    """The term for 0 (the uniqueness lemma only covers c > 0)."""

    def __repr__(self) -> str:
        return "Zero"


ZERO = Zero()


@dataclass(frozen=True)
class Node:
    """One normal-form layer: value = A_index(k, arg) * coeff + tail.

    ``index`` is a plain int in unnested trees and itself a term in nested
    trees; a tree never mixes the two.  ``coeff`` is never decomposed: the
    normal form defines no recursion on it.
    """

    index: "int | Zero | Node"
    arg: "Zero | Node"
    coeff: int
    tail: "Zero | Node"


AckTerm = Union[Zero, Node]


@lru_cache(maxsize=None)
def decompose(c: int, k: int) -> tuple[int, int, int, int]:
    """The unique (a, b, m, n) of the k-normal form of c > 0.

    a is found by an upward scan (A-values grow so fast that it ends after a
    handful of steps), with ties A_{a+1}(k, 0) = A_a(k, b) resolved in favour
    of the larger a.  b is likewise scanned upward, incrementally.
    """
    require_base(k)
    if c < 1:
        raise ValueError(f"normal forms are defined for c > 0, got {c}")
    a = 0
    while not isinstance(ack_eval(a + 1, k, 0, c), ExceedsBound):
        a += 1
    if a == 0:
        power, b = 1, 0
        while power * k <= c:
            power *= k
            b += 1
        head = power
    else:
        head = ack_eval(a, k, 0, c)
        assert isinstance(head, int)
        b = 0
        while True:
            nxt = ack_iter(a - 1, k, head, k, c)  # A_a(k, b+1)
            if isinstance(nxt, ExceedsBound):
                break
            head = nxt
            b += 1
    return a, b, c // head, c % head


@lru_cache(maxsize=None)
def to_tree(c: int, k: int, mode: Mode = "unnested") -> AckTerm:
    """Hereditary normal-form tree of c at base k."""
    require_base(k)
    if c < 0:
        raise ValueError("c must be non-negative")
    if c == 0:
        return ZERO
    # Peel the tail chain iteratively; the chain can be as long as the number
    # of base-k digits, which would overflow Python's recursion limit.
    layers = []
    rest = c
    while rest > 0:
        a, b, m, n = decompose(rest, k)
        index: "int | AckTerm" = a if mode == "unnested" else to_tree(a, k, mode)
        layers.append((index, to_tree(b, k, mode), m))
        rest = n
    tree: AckTerm = ZERO
    for index, arg, m in reversed(layers):
        tree = Node(index, arg, m, tree)
    return tree


def eval_tree(t: AckTerm, k: int, bound: int) -> "int | ExceedsBound":
    """Value of a normal-form tree read at base k, under cutoff.

    Reading a k-tree at base k+1 coincides with the base-change operator:
    the tree of the image is structurally the tree of the pre-image.
    """
    require_base(k)
    total = 0
    node = t
    while isinstance(node, Node):
        if isinstance(node.index, int):
            level = node.index
        else:
            level = eval_tree(node.index, k, bound)
            if isinstance(level, ExceedsBound):
                return EXCEEDS  # A_level(k, .) >= level + 1 > bound
        arg = eval_tree(node.arg, k, bound)
        if isinstance(arg, ExceedsBound):
            return EXCEEDS  # A_a(k, arg) >= arg + 1 > bound
        head = ack_eval(level, k, arg, bound)
        if isinstance(head, ExceedsBound):
            return EXCEEDS
        total += head * node.coeff
        if total > bound:
            return EXCEEDS
        node = node.tail
    return total


def tree_mode(t: AckTerm) -> "Mode | None":
    """The mode of a tree, or None for Zero (which fits either)."""
    node = t
    while isinstance(node, Node):
        if isinstance(node.index, int):
            return "unnested"
        if isinstance(node.index, Node):
            return "nested"
        # Zero index: look deeper before concluding.
        for sub in (node.arg, node.tail):
            mode = tree_mode(sub)
            if mode is not None:
                return mode
        return "nested"  # all indices are Zero terms
    return None


def is_normal_form(t: AckTerm, k: int) -> bool:
    """Whether every node of t satisfies the four normal-form conditions at k.

    Node values are materialized for the bounded condition checks; a tree
    whose value exceeds VALIDATION_CAP cannot be validated and raises.
    """
    require_base(k)
    node = t
    modes = set()
    while isinstance(node, Node):
        modes.add("unnested" if isinstance(node.index, int) else "nested")
        if len(modes) > 1:
            return False
        if not _node_is_valid(node, k):
            return False
        node = node.tail
    return True


def _node_is_valid(node: Node, k: int) -> bool:
    if node.coeff < 1:
        return False
    value = eval_tree(node, k, VALIDATION_CAP)
    if isinstance(value, ExceedsBound):
        raise ValueError("node value exceeds the validation cap")
    if isinstance(node.index, int):
        level = node.index
    else:
        if not is_normal_form(node.index, k):
            return False
        sub = eval_tree(node.index, k, value)
        if isinstance(sub, ExceedsBound):
            return False
        level = sub
    arg = eval_tree(node.arg, k, value)
    if isinstance(arg, ExceedsBound):
        return False  # A_a(k, arg) > value, condition (3) fails
    head = ack_eval(level, k, arg, value)
    if isinstance(head, ExceedsBound):
        return False
    # (2): A_a(k, 0) <= value < A_{a+1}(k, 0), with a maximal.
    if isinstance(ack_eval(level, k, 0, value), ExceedsBound):
        return False
    if not isinstance(ack_eval(level + 1, k, 0, value), ExceedsBound):
        return False
    # (3): value < A_a(k, arg + 1).
    if not isinstance(ack_eval(level, k, arg + 1, value), ExceedsBound):
        return False
    tail = eval_tree(node.tail, k, value)
    if isinstance(tail, ExceedsBound) or tail >= head:
        return False  # (4)
    # (1) holds by construction of eval_tree; recurse into the sub-terms.
    return is_normal_form(node.arg, k) and is_normal_form(node.tail, k)


def tree_cmp(left: AckTerm, right: AckTerm) -> int:
    """-1/0/1 ordering of two trees that are valid at a common base.

    Lexicographic on (index, arg, coeff, tail); by the range conditions of
    the uniqueness lemma this matches the numeric order of the values, at
    the common base and at every larger one.
    """
    if isinstance(left, Zero) or isinstance(right, Zero):
        if isinstance(left, Zero) and isinstance(right, Zero):
            return 0
        return -1 if isinstance(left, Zero) else 1
    if isinstance(left.index, int) != isinstance(right.index, int):
        raise ValueError("cannot compare trees of different modes")
    if isinstance(left.index, int):
        if left.index != right.index:
            return -1 if left.index < right.index else 1
    else:
        c = tree_cmp(left.index, right.index)
        if c:
            return c
    c = tree_cmp(left.arg, right.arg)
    if c:
        return c
    if left.coeff != right.coeff:
        return -1 if left.coeff < right.coeff else 1
    return tree_cmp(left.tail, right.tail)


def render_term(t: AckTerm) -> str:
    """Canonical text form: ``A(a; b)*m + n``, omitting ``*1`` and ``+ 0``."""
    if isinstance(t, Zero):
        return "0"
    parts = []
    node = t
    while isinstance(node, Node):
        index = str(node.index) if isinstance(node.index, int) else render_term(node.index)
        piece = f"A({index}; {render_term(node.arg)})"
        if node.coeff != 1:
            piece += f"*{node.coeff}"
        parts.append(piece)
        node = node.tail
    return " + ".join(parts)
