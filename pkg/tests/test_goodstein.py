"""Goodstein processes: classic pinned values, traces, truncation, JSON."""

import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ackgoodstein.ackmath import DEFAULT_BOUND, EXCEEDS, ExceedsBound
from ackgoodstein.goodstein import (
    hereditary_rewrite,
    render_hereditary,
    run,
    step,
    trace_to_dict,
    trace_to_json,
)


def naive_rewrite(m: int, k: int) -> int:
    """Hereditary base bump without cutoff, for small m only."""
    total = 0
    exponent = 0
    while m > 0:
        m, digit = divmod(m, k)
        if digit:
            total += digit * (k + 1) ** naive_rewrite(exponent, k)
        exponent += 1
    return total


def test_classic_paper_values():
    trace = run("classic", 20, 3)
    values = [record.value for record in trace.steps]
    assert values[0] == 20
    assert values[1] == 3**27 + 3**2 * 2 + 3 * 2 + 2
    assert values[2] == 4**256 + 4**2 * 2 + 4 * 2 + 1


def test_render_hereditary():
    assert render_hereditary(20, 2) == "2^(2^(2)) + 2^(2)"
    assert render_hereditary(0, 5) == "0"
    assert render_hereditary(41, 4) == "4^(2)*2 + 4*2 + 1"


@given(st.integers(0, 50_000), st.integers(2, 5))
@settings(deadline=None, max_examples=300)
def test_hereditary_rewrite_matches_naive(m, k):
    assert hereditary_rewrite(m, k, 10**100) == naive_rewrite(m, k)


def test_step_basics():
    assert step("unnested", 0, 7, DEFAULT_BOUND) == 0
    assert step("unnested", 1, 2, DEFAULT_BOUND) == 0
    assert step("unnested", 3, 2, DEFAULT_BOUND) == 27
    assert step("nested", 16, 2, 10**6) is EXCEEDS
    with pytest.raises(ValueError):
        step("bogus", 1, 2, DEFAULT_BOUND)


@pytest.mark.parametrize("variant", ["classic", "unnested", "nested"])
def test_tiny_starts_terminate(variant):
    trace = run(variant, 1, 10)
    assert trace.terminated
    assert [record.value for record in trace.steps] == [1, 0]
    assert run(variant, 0, 5).terminated


def test_truncation_value_too_large():
    trace = run("unnested", 16, 10, bound=10**6)
    assert not trace.terminated
    assert trace.truncated_reason == "value_too_large"
    assert trace.steps[-1].value is EXCEEDS


def test_truncation_max_steps():
    trace = run("classic", 100, 3)
    assert not trace.terminated
    assert trace.truncated_reason == "max_steps"
    assert len(trace.steps) == 3


def test_trace_json_schema():
    trace = run("unnested", 3, 3, with_ordinals=True)
    data = json.loads(trace_to_json(trace))
    assert set(data) == {"variant", "start", "terminated", "truncated_reason", "steps"}
    assert data["start"] == "3"
    first = data["steps"][0]
    assert set(first) == {"k", "base", "value", "normal_form", "ordinal"}
    assert first["value"] == "3"
    assert data["steps"][1]["ordinal"] == "e(1)"
    assert trace_to_dict(trace) == data


def test_too_large_serialized():
    trace = run("unnested", 16, 10, bound=10**6)
    data = trace_to_dict(trace)
    assert data["steps"][-1]["value"] == "too_large"
    assert data["truncated_reason"] == "value_too_large"
