"""Cutoff Ackermann evaluation against a naive recursive oracle."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ackgoodstein.ackmath import (
    DEFAULT_BOUND,
    EXCEEDS,
    ExceedsBound,
    ack_eval,
    ack_iter,
    bounded_pow,
)

ORACLE_CAP = 10**9


def naive_ack(a: int, k: int, b: int) -> int:
    """Direct recursion, no cutoff; only usable on tiny inputs."""
    if a == 0:
        return k**b
    value = 0 if b == 0 else naive_ack(a, k, b - 1)
    for _ in range(k):
        value = naive_ack(a - 1, k, value)
        if value > ORACLE_CAP:
            raise OverflowError
    return value


def test_pinned_values():
    assert ack_eval(0, 2, 3, 10**6) == 8
    assert ack_eval(1, 3, 0, 10**6) == 27
    assert ack_eval(1, 2, 0, 10**6) == 2
    assert ack_eval(1, 2, 1, 10**6) == 16
    assert ack_eval(1, 4, 0, 10**200) == 4**256
    assert ack_eval(2, 2, 0, DEFAULT_BOUND) == 2**65536


def test_exceeds_short_circuits():
    assert ack_eval(1, 4, 0, 10**100) is EXCEEDS
    assert ack_eval(3, 2, 0, DEFAULT_BOUND) is EXCEEDS
    # a huge tower index must not hang
    assert ack_eval(50, 9, 50, 10**50) is EXCEEDS


def test_invalid_base():
    with pytest.raises(ValueError):
        ack_eval(1, 1, 0, 10**6)
    with pytest.raises(ValueError):
        ack_eval(0, 0, 2, 10**6)


@given(st.integers(2, 9), st.integers(0, 60))
def test_bounded_pow_matches_builtin(k, b):
    exact = k**b
    result = bounded_pow(k, b, 10**40)
    if exact <= 10**40:
        assert result == exact
    else:
        assert isinstance(result, ExceedsBound)


@given(st.integers(0, 2), st.integers(2, 4), st.integers(0, 3))
@settings(deadline=None)
def test_matches_naive_oracle(a, k, b):
    try:
        expected = naive_ack(a, k, b)
    except OverflowError:
        assert ack_eval(a, k, b, ORACLE_CAP) is EXCEEDS
        return
    if expected <= ORACLE_CAP:
        assert ack_eval(a, k, b, ORACLE_CAP) == expected
    else:
        assert ack_eval(a, k, b, ORACLE_CAP) is EXCEEDS


@given(st.integers(0, 2), st.integers(2, 4), st.integers(0, 4))
@settings(deadline=None)
def test_monotone_in_b(a, k, b):
    lo = ack_eval(a, k, b, 10**30)
    hi = ack_eval(a, k, b + 1, 10**30)
    if isinstance(lo, ExceedsBound):
        assert isinstance(hi, ExceedsBound)
    elif not isinstance(hi, ExceedsBound):
        assert lo < hi


@given(st.integers(0, 1), st.integers(2, 4), st.integers(0, 3))
@settings(deadline=None)
def test_iterate_agrees_with_successor_level(a, k, times):
    # A_{a+1}(k, 0) is the k-fold iterate of A_a(k, .) starting at 0
    if times != k:
        value = ack_iter(a, k, 0, times, 10**30)
        assert isinstance(value, (int, ExceedsBound))
        return
    assert ack_iter(a, k, 0, k, 10**30) == ack_eval(a + 1, k, 0, 10**30)
