"""Structure and determinism of the verification suites."""

import pytest

from ackgoodstein.verify import run_suite


def strip_timing(report_dict):
    report_dict = dict(report_dict)
    report_dict.pop("elapsed_ms")
    return report_dict


def test_report_shape():
    report = run_suite("lemmas", bound=40, k_max=2, seed=0)
    data = report.to_dict()
    assert set(data) == {"suite", "bound", "cases", "failures", "elapsed_ms"}
    assert data["suite"] == "lemmas"
    assert data["cases"] > 0
    for failure in data["failures"]:
        assert set(failure) == {"check", "input", "expected", "got"}


def test_seeded_runs_are_deterministic():
    first = run_suite("ordinals", seed=5, samples=80)
    second = run_suite("ordinals", seed=5, samples=80)
    assert strip_timing(first.to_dict()) == strip_timing(second.to_dict())


def test_unknown_suite_rejected():
    with pytest.raises(ValueError):
        run_suite("nonsense")


def test_failures_carry_reproducers():
    report = run_suite("lemmas", bound=30, k_max=2, seed=0)
    for failure in report.failures:
        assert failure.input and failure.expected
