"""Exhaustive and sampled verification suites.

The "lemmas" suite sweeps the number-theoretic facts (normal-form
uniqueness, round trips, base-change monotonicity and normal-form
preservation, monotonicity/invariance/majorization of the ordinal
assignments, Goodstein descent) over exhaustive ranges.  The "ordinals"
suite checks the ordinal kernel on seeded random terms (total order,
fundamental-sequence laws, the Bachmann property and the majorization
proposition).  Base-change images beyond the materialization cutoff are
compared structurally on their trees, which normal-form preservation
licenses.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from .ackmath import ExceedsBound, ack_eval, ack_iter
from .base_change import base_change
from .goodstein import run
from .normal_form import ZERO, Zero, decompose, eval_tree, is_normal_form, to_tree, tree_cmp
from .ordinal_map import chi, psi
from .ordinals import (
    ZERO as ORD_ZERO,
    Ordinal,
    add,
    cmp,
    descent,
    format_ordinal,
    fund,
    is_canonical,
    parse_ordinal,
    random_ordinal,
    times,
)

#: Materialization cutoff for base-change images during the sweeps.
SWEEP_CUTOFF = 10 ** 400

MODES = ("unnested", "nested")


@dataclass
class Failure:
    check: str
    input: str
    expected: str
    got: str

    def to_dict(self) -> dict:
        return {"check": self.check, "input": self.input, "expected": self.expected, "got": self.got}


@dataclass
class SuiteReport:
    suite: str
    bound: int
    k_max: int
    seed: int
    cases: int = 0
    failures: list[Failure] = field(default_factory=list)
    elapsed_ms: int = 0

    MAX_FAILURES = 25

    @property
    def passed(self) -> bool:
        return not self.failures

    def tally(self, check: str, n: int = 1) -> None:
        self.cases += n

    def fail(self, check: str, input_: object, expected: object, got: object) -> None:
        if len(self.failures) < self.MAX_FAILURES:
            self.failures.append(Failure(check, str(input_), str(expected), str(got)))

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "bound": str(self.bound),
            "cases": self.cases,
            "failures": [f.to_dict() for f in self.failures],
            "elapsed_ms": self.elapsed_ms,
        }


# --- lemma sweeps ----------------------------------------------------------


def _head_values(k: int, limit: int) -> list[tuple[int, int, int]]:
    """All (a, b, A_a(k, b)) with the value <= limit."""
    out = []
    a = 0
    while True:
        v = ack_eval(a, k, 0, limit)
        if isinstance(v, ExceedsBound):
            break
        b = 0
        while not isinstance(v, ExceedsBound):
            out.append((a, b, v))
            b += 1
            v = ack_eval(a, k, b, limit)
        a += 1
    return out


def check_uniqueness(report: SuiteReport, bound: int, k_max: int) -> None:
    """Exhaustive tuple search finds exactly the decompose output."""
    for k in range(2, k_max + 1):
        heads = _head_values(k, bound)
        for c in range(1, bound + 1):
            matches = []
            for a, b, v in heads:
                if v > c:
                    continue
                m, n = divmod(c, v)
                # (1) and (4) hold by construction; check (2) and (3).
                if not isinstance(ack_eval(a + 1, k, 0, c), ExceedsBound):
                    continue
                if not isinstance(ack_eval(a, k, b + 1, c), ExceedsBound):
                    continue
                matches.append((a, b, m, n))
            report.tally("uniqueness")
            if len(matches) != 1 or matches[0] != decompose(c, k):
                report.fail("uniqueness", (c, k), "exactly the decompose tuple", matches)


def check_round_trip(report: SuiteReport, bound: int, k_max: int) -> None:
    for k in range(2, k_max + 1):
        for mode in MODES:
            for c in range(bound + 1):
                got = eval_tree(to_tree(c, k, mode), k, c)
                report.tally("round_trip")
                if got != c:
                    report.fail("round_trip", (c, k, mode), c, got)


def check_normal_form_lemma(report: SuiteReport, bound: int, k_max: int) -> None:
    # Part 1: A_a^l(k, 0) is in k-normal form for 0 < l < k, with m=1, n=0.
    for k in range(2, k_max + 1):
        for a in range(3):
            for l in range(1, k):
                v = ack_iter(a, k, 0, l, bound)
                if isinstance(v, ExceedsBound) or v == 0:
                    continue
                _, _, m, n = decompose(v, k)
                report.tally("nf_lemma_iterates")
                if m != 1 or n != 0:
                    report.fail("nf_lemma_iterates", (a, k, l), "(m, n) = (1, 0)", (m, n))
    # Part 2: in a normal form A_a(k, b), every A_a(k, l) with l < b is one too.
    for k in range(2, k_max + 1):
        for c in range(1, bound + 1):
            a, b, _, _ = decompose(c, k)
            for l in range(b):
                v = ack_eval(a, k, l, bound)
                if isinstance(v, ExceedsBound):
                    continue
                report.tally("nf_lemma_prefix")
                if decompose(v, k) != (a, l, 1, 0):
                    report.fail("nf_lemma_prefix", (c, k, l), (a, l, 1, 0), decompose(v, k))
    # Validity of every produced tree.
    for k in range(2, k_max + 1):
        for mode in MODES:
            for c in range(min(bound, 10_000) + 1):
                report.tally("tree_validity")
                if not is_normal_form(to_tree(c, k, mode), k):
                    report.fail("tree_validity", (c, k, mode), True, False)


def _bc_keys(k: int, bound: int, mode: str) -> list:
    """bc(c, k) for c = 0..bound: the number if materializable, else the tree.

    Trees compare like the images: base change preserves tree structure
    (verified separately), and tree order is base-independent.
    """
    keys = []
    for c in range(bound + 1):
        v = base_change(c, k, mode, SWEEP_CUTOFF)
        keys.append(v if isinstance(v, int) else to_tree(c, k, mode))
    return keys


def check_base_change_monotone(report: SuiteReport, bound: int, k_max: int) -> None:
    for k in range(2, min(k_max, 3) + 1):
        for mode in MODES:
            keys = _bc_keys(k, bound, mode)
            # Inflation: c <= bc(c, k).
            for c, key in enumerate(keys):
                report.tally("bc_inflation")
                if isinstance(key, int) and key < c:
                    report.fail("bc_inflation", (c, k, mode), f">= {c}", key)
            # Strict monotonicity via sortedness of adjacent pairs.
            for c in range(bound):
                left, right = keys[c], keys[c + 1]
                report.tally("bc_monotone")
                if isinstance(left, int) and isinstance(right, int):
                    ok = left < right
                elif isinstance(left, int):
                    ok = True  # materializable < beyond-cutoff
                elif isinstance(right, int):
                    ok = False
                else:
                    ok = tree_cmp(left, right) < 0
                if not ok:
                    report.fail("bc_monotone", (c, c + 1, k, mode), "bc(c) < bc(c+1)", "violated")


def check_base_change_preserves_nf(report: SuiteReport, bound: int, k_max: int) -> None:
    """Lemma pr: the (k+1)-tree of the image is the k-tree of the pre-image."""
    for k in range(2, min(k_max, 3) + 1):
        for mode in MODES:
            for c in range(bound + 1):
                image = base_change(c, k, mode, SWEEP_CUTOFF)
                if isinstance(image, ExceedsBound):
                    continue
                report.tally("bc_preserves_nf")
                if to_tree(image, k + 1, mode) != to_tree(c, k, mode):
                    report.fail("bc_preserves_nf", (c, k, mode), "structurally equal trees", "mismatch")


def check_bc_identity_small(report: SuiteReport, bound: int, k_max: int) -> None:
    for k in range(2, k_max + 1):
        for mode in MODES:
            for c in range(min(k, bound + 1)):
                report.tally("bc_identity_digits")
                if base_change(c, k, mode, SWEEP_CUTOFF) != c:
                    report.fail("bc_identity_digits", (c, k, mode), c, base_change(c, k, mode, SWEEP_CUTOFF))


def check_assignment_monotone(report: SuiteReport, bound: int, k_max: int) -> None:
    for k in range(2, min(k_max, 3) + 1):
        previous = psi(k, 0)
        for c in range(1, bound + 1):
            current = psi(k, c)
            report.tally("psi_monotone")
            if not previous < current:
                report.fail("psi_monotone", (c - 1, c, k), "psi strictly increasing", format_ordinal(current))
            previous = current
        previous = chi(k, 0)
        for c in range(1, bound // 2 + 1):
            current = chi(k, c)
            report.tally("chi_monotone")
            if not previous < current:
                report.fail("chi_monotone", (c - 1, c, k), "chi strictly increasing", format_ordinal(current))
            previous = current


def check_assignment_invariance(report: SuiteReport, bound: int, k_max: int) -> None:
    for k in range(2, min(k_max, 3) + 1):
        for mode, assign, limit in (("unnested", psi, bound), ("nested", chi, bound // 2)):
            for c in range(limit + 1):
                image = base_change(c, k, mode, SWEEP_CUTOFF)
                if isinstance(image, ExceedsBound):
                    continue
                report.tally(f"{mode}_invariance")
                if assign(k + 1, image) != assign(k, c):
                    report.fail(
                        f"{mode}_invariance",
                        (c, k),
                        format_ordinal(assign(k, c)),
                        format_ordinal(assign(k + 1, image)),
                    )


def check_majorization(report: SuiteReport, bound: int, k_max: int) -> None:
    """psi_{k+1}(bc(c) - 1) >= (psi_k c)[k], and the chi analogue."""
    for k in range(2, min(k_max, 3) + 1):
        for mode, assign, limit in (("unnested", psi, bound), ("nested", chi, bound // 2)):
            for c in range(1, limit + 1):
                image = base_change(c, k, mode, SWEEP_CUTOFF)
                if isinstance(image, ExceedsBound):
                    continue
                left = assign(k + 1, image - 1)
                right = fund(assign(k, c), k)
                report.tally(f"{mode}_majorization")
                if not left >= right:
                    report.fail(
                        f"{mode}_majorization", (c, k), f">= {format_ordinal(right)}", format_ordinal(left)
                    )


def check_goodstein_descent(report: SuiteReport, bound: int, k_max: int) -> None:
    """o-values strictly decrease along traces; tiny starts terminate."""
    trace_bound = 10 ** 2000
    for start in range(min(bound, 50) + 1):
        for mode, assign in (("unnested", psi), ("nested", chi)):
            trace = run(mode, start, max_steps=15, bound=trace_bound)
            previous: "Ordinal | None" = None
            for record in trace.steps:
                if isinstance(record.value, ExceedsBound):
                    break
                current = assign(record.base, record.value)
                if previous is not None:
                    report.tally(f"{mode}_descent")
                    if not current < previous:
                        report.fail(f"{mode}_descent", (start, record.k), "strict ordinal descent", format_ordinal(current))
                if record.value == 0:
                    break
                previous = current
            report.tally(f"{mode}_determinism")
            if run(mode, start, max_steps=15, bound=trace_bound) != trace:
                report.fail(f"{mode}_determinism", start, "identical re-run", "differs")
    for start in (0, 1):
        trace = run("unnested", start, max_steps=5, bound=10 ** 9)
        report.tally("small_termination")
        if not trace.terminated:
            report.fail("small_termination", start, "terminated", trace.truncated_reason)


def check_o_value_anchor(report: SuiteReport, bound: int, k_max: int) -> None:
    from .ordinal_map import o_value
    from .ordinals import eps, from_nat

    for level in (1, 2):
        start = ack_eval(level, 2, 0, 10 ** 20000)
        assert isinstance(start, int)
        got = o_value(start, 0, "unnested")
        report.tally("o_value_anchor")
        if got != eps(from_nat(level)):
            report.fail("o_value_anchor", level, f"e({level})", format_ordinal(got))


LEMMA_CHECKS = (
    check_uniqueness,
    check_round_trip,
    check_normal_form_lemma,
    check_base_change_monotone,
    check_base_change_preserves_nf,
    check_bc_identity_small,
    check_assignment_monotone,
    check_assignment_invariance,
    check_majorization,
    check_goodstein_descent,
    check_o_value_anchor,
)


# --- sampled ordinal properties -------------------------------------------


def check_total_order(report: SuiteReport, rng: random.Random, samples: int) -> None:
    for _ in range(samples):
        a = random_ordinal(rng)
        b = random_ordinal(rng)
        c = random_ordinal(rng)
        report.tally("order_trichotomy")
        direction = cmp(a, b)
        if direction != -cmp(b, a) or (direction == 0) != (a == b):
            report.fail("order_trichotomy", (format_ordinal(a), format_ordinal(b)), "trichotomy", direction)
        report.tally("order_transitivity")
        lo, mid, hi = sorted((a, b, c))
        if not (lo <= mid and mid <= hi and lo <= hi):
            report.fail("order_transitivity", tuple(map(format_ordinal, (a, b, c))), "sorted chain", "violated")


def check_fund_laws(report: SuiteReport, rng: random.Random, samples: int) -> None:
    for _ in range(samples):
        a = random_ordinal(rng)
        k = rng.randrange(1, 4)
        down = fund(a, k)
        report.tally("fund_decreases")
        if a.monomials and not down < a:
            report.fail("fund_decreases", (format_ordinal(a), k), "fund(a, k) < a", format_ordinal(down))
        report.tally("fund_equality_iff_zero")
        if (down == a) != (a == ORD_ZERO):
            report.fail("fund_equality_iff_zero", format_ordinal(a), "equality only at 0", format_ordinal(down))
        report.tally("fund_k_monotone")
        if not down <= fund(a, k + rng.randrange(0, 3)):
            report.fail("fund_k_monotone", (format_ordinal(a), k), "fund weakly increasing in k", format_ordinal(down))
        report.tally("canonical_closure")
        if not is_canonical(down):
            report.fail("canonical_closure", (format_ordinal(a), k), "canonical output", repr(down))


def check_add_laws(report: SuiteReport, rng: random.Random, samples: int) -> None:
    for _ in range(samples):
        a = random_ordinal(rng)
        b = random_ordinal(rng)
        c = random_ordinal(rng)
        report.tally("add_associative")
        if add(add(a, b), c) != add(a, add(b, c)):
            report.fail("add_associative", tuple(map(format_ordinal, (a, b, c))), "associativity", "violated")
        report.tally("add_right_monotone")
        if b < c and not add(a, b) < add(a, c):
            report.fail("add_right_monotone", tuple(map(format_ordinal, (a, b, c))), "strict right monotonicity", "violated")
        report.tally("add_canonical")
        if not is_canonical(add(a, b)):
            report.fail("add_canonical", (format_ordinal(a), format_ordinal(b)), "canonical output", "not canonical")


def check_parse_round_trip(report: SuiteReport, rng: random.Random, samples: int) -> None:
    for _ in range(samples):
        a = random_ordinal(rng)
        report.tally("parse_round_trip")
        if parse_ordinal(format_ordinal(a)) != a:
            report.fail("parse_round_trip", format_ordinal(a), "round-trip identity", "mismatch")


def _between_sample(rng: random.Random, lower: Ordinal, upper: Ordinal) -> "Ordinal | None":
    """Some ordinal strictly between lower and upper, if one can be found."""
    for _ in range(12):
        candidate = rng.choice(
            [
                random_ordinal(rng),
                add(lower, random_ordinal(rng, depth=2)),
                fund(upper, rng.randrange(1, 6)),
            ]
        )
        if lower < candidate < upper:
            return candidate
    return None


def check_bachmann(report: SuiteReport, rng: random.Random, samples: int) -> None:
    """fund(a, n) < b < a implies fund(a, n) <= fund(b, 1)."""
    accepted = 0
    attempts = 0
    while accepted < samples and attempts < samples * 40:
        attempts += 1
        a = random_ordinal(rng)
        if not a.monomials:
            continue
        n = rng.randrange(1, 5)
        down = fund(a, n)
        b = _between_sample(rng, down, a)
        if b is None:
            continue
        accepted += 1
        report.tally("bachmann")
        if not down <= fund(b, 1):
            report.fail(
                "bachmann",
                (format_ordinal(a), n, format_ordinal(b)),
                f"fund(a, n) <= fund(b, 1)",
                format_ordinal(fund(b, 1)),
            )


def check_prop_majorize(report: SuiteReport, rng: random.Random, samples: int) -> None:
    """Chains with fund(x_n, n+1) <= x_{n+1} <= x_n majorize the canonical descent."""
    for _ in range(samples):
        length = rng.randrange(2, 7)
        chain = [random_ordinal(rng)]
        for n in range(length - 1):
            lower = fund(chain[-1], n + 1)
            options = [chain[-1], lower]
            between = _between_sample(rng, lower, chain[-1]) if lower < chain[-1] else None
            if between is not None:
                options.append(between)
            chain.append(rng.choice(options))
        canonical = descent(chain[0], length - 1)
        for n, value in enumerate(chain):
            if n >= len(canonical):
                break
            report.tally("prop_majorize")
            if not value >= canonical[n]:
                report.fail(
                    "prop_majorize",
                    (format_ordinal(chain[0]), n),
                    f">= {format_ordinal(canonical[n])}",
                    format_ordinal(value),
                )


ORDINAL_CHECKS = (
    check_total_order,
    check_fund_laws,
    check_add_laws,
    check_parse_round_trip,
    check_bachmann,
    check_prop_majorize,
)

SUITES = ("lemmas", "ordinals")


def run_suite(
    suite: str,
    bound: int = 300,
    k_max: int = 3,
    seed: int = 0,
    samples: int = 2000,
) -> SuiteReport:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    if bound < 1:
        raise ValueError("bound must be >= 1")
    if k_max < 2:
        raise ValueError("k_max must be >= 2")
    report = SuiteReport(suite=suite, bound=bound, k_max=k_max, seed=seed)
    started = time.monotonic()
    if suite == "lemmas":
        for check in LEMMA_CHECKS:
            check(report, bound, k_max)
    else:
        rng = random.Random(seed)
        for check in (check_total_order, check_fund_laws, check_add_laws, check_parse_round_trip):
            check(report, rng, samples)
        # The quantified-over-an-interval properties are sampled more lightly.
        for check in (check_bachmann, check_prop_majorize):
            check(report, rng, max(1, samples // 10))
    report.elapsed_ms = int((time.monotonic() - started) * 1000)
    return report
