"""Normal-form decomposition, trees, validity and ordering.

The uniqueness tests use an independent exhaustive search over candidate
(a, b, m, n) tuples rather than trusting the decomposition scan.
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ackgoodstein.ackmath import EXCEEDS, ExceedsBound, ack_eval
from ackgoodstein.normal_form import (
    ZERO,
    Node,
    decompose,
    eval_tree,
    is_normal_form,
    render_term,
    to_tree,
    tree_cmp,
)

SEARCH_CAP = 10**12


def all_decompositions(c: int, k: int) -> list:
    """Every (a, b, m, n) satisfying the four normal-form conditions."""
    found = []
    for a in range(0, 8):
        head_next = ack_eval(a + 1, k, 0, SEARCH_CAP)
        for b in range(0, 64):
            head = ack_eval(a, k, b, SEARCH_CAP)
            if isinstance(head, ExceedsBound) or head > c:
                break
            nxt = ack_eval(a, k, b + 1, SEARCH_CAP)
            if not isinstance(nxt, ExceedsBound) and nxt <= c:
                continue  # condition 3: c < A_a(k, b+1)
            m, n = divmod(c, head)
            if n >= head:
                continue
            # condition 2: a maximal, i.e. c < A_{a+1}(k, 0)
            if not isinstance(head_next, ExceedsBound) and head_next <= c:
                continue
            found.append((a, b, m, n))
    return found


def test_pinned_decompositions():
    assert decompose(20, 2) == (1, 1, 1, 4)
    assert decompose(27, 3) == (1, 0, 1, 0)
    assert decompose(2, 2) == (1, 0, 1, 0)
    assert decompose(16, 2) == (1, 1, 1, 0)
    assert decompose(1, 5) == (0, 0, 1, 0)


def test_decompose_rejects_bad_inputs():
    with pytest.raises(ValueError):
        decompose(0, 2)
    with pytest.raises(ValueError):
        decompose(5, 1)


@pytest.mark.parametrize("k", [2, 3])
def test_uniqueness_small_exhaustive(k):
    for c in range(1, 400):
        candidates = all_decompositions(c, k)
        assert candidates == [decompose(c, k)], (c, k)


def test_render_example():
    assert render_term(to_tree(20, 2, "unnested")) == "A(1; A(0; 0)) + A(1; 0)*2"
    assert render_term(to_tree(27, 3, "unnested")) == "A(1; 0)"
    assert render_term(ZERO) == "0"


@given(st.integers(1, 50_000), st.integers(2, 4), st.sampled_from(["unnested", "nested"]))
@settings(deadline=None, max_examples=300)
def test_round_trip(c, k, mode):
    tree = to_tree(c, k, mode)
    assert eval_tree(tree, k, 10**30) == c
    assert is_normal_form(tree, k)


@given(st.integers(1, 5000), st.integers(1, 5000), st.integers(2, 3))
@settings(deadline=None, max_examples=200)
def test_tree_order_matches_numeric_order(c, d, k):
    sign = tree_cmp(to_tree(c, k, "unnested"), to_tree(d, k, "unnested"))
    assert sign == (c > d) - (c < d)


def test_nested_tree_has_tree_index():
    tree = to_tree(16, 2, "nested")
    assert isinstance(tree.index, Node)
    assert is_normal_form(tree, 2)


def test_invalid_tree_rejected():
    # A(0; 0)*2 + A(0; 0) has a tail not below its head value
    bogus = Node(0, ZERO, 2, Node(0, ZERO, 1, ZERO))
    assert not is_normal_form(bogus, 2)


def test_eval_tree_exceeds():
    tree = to_tree(10**20, 2, "unnested")
    assert eval_tree(tree, 2, 10**6) is EXCEEDS
