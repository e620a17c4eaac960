"""Ordinal assignments psi/chi and the o-value termination measure."""

from hypothesis import given, settings
from hypothesis import strategies as st

from ackgoodstein.ackmath import DEFAULT_BOUND, EXCEEDS, ExceedsBound, ack_eval
from ackgoodstein.base_change import bc_nested, bc_unnested
from ackgoodstein.ordinal_map import chi, o_value, psi
from ackgoodstein.ordinals import ZERO, cmp, eps, format_ordinal, from_nat, parse_ordinal


def test_pinned_values():
    assert psi(2, 0) == ZERO
    assert psi(2, 1) == eps(ZERO)
    assert psi(2, 2) == eps(from_nat(1))
    assert psi(3, 27) == eps(from_nat(1))
    assert format_ordinal(psi(2, 20)) == "w^(e(1)+e(0)) + e(1)*2"


def test_chi_nests_the_level_index():
    # at base 2 the level index 2 itself decomposes as A_1(2, 0), so the
    # subscript chain keeps nesting: chi_2(2) = e(e(0))
    assert chi(2, 2) == eps(eps(ZERO))
    assert chi(2, 2**65536) == eps(eps(eps(ZERO)))
    assert format_ordinal(chi(2, 20)) == "w^(e(e(0))+e(0)) + e(e(0))*2"
    assert chi(3, 20) == psi(3, 20)  # all level indices at base 3 are 0 here


@given(st.integers(0, 1500), st.integers(0, 1500), st.integers(2, 3))
@settings(deadline=None, max_examples=250)
def test_strictly_monotone(c, d, k):
    if c == d:
        assert psi(k, c) == psi(k, d)
        return
    lo, hi = min(c, d), max(c, d)
    assert cmp(psi(k, lo), psi(k, hi)) < 0
    assert cmp(chi(k, lo), chi(k, hi)) < 0


@given(st.integers(0, 800), st.integers(2, 3))
@settings(deadline=None, max_examples=250)
def test_base_change_invariance(c, k):
    image = bc_unnested(c, k, 10**300)
    if not isinstance(image, ExceedsBound):
        assert psi(k + 1, image) == psi(k, c)
    image = bc_nested(c, k, 10**300)
    if not isinstance(image, ExceedsBound):
        assert chi(k + 1, image) == chi(k, c)


def test_o_value_anchor():
    for ell in (1, 2):
        start = ack_eval(ell, 2, 0, DEFAULT_BOUND)
        assert o_value(start, 0, "unnested") == eps(from_nat(ell))


def test_o_value_descends():
    values = [o_value(3, k, "unnested") for k in range(3)]
    assert format_ordinal(values[0]) == "e(1) + e(0)"
    assert format_ordinal(values[1]) == "e(1)"
    for earlier, later in zip(values, values[1:]):
        assert cmp(later, earlier) < 0


def test_o_value_truncates():
    assert o_value(16, 3, "unnested", bound=10**6) is EXCEEDS
