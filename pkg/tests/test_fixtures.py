"""The bundled analytic fixtures and their declared closed forms."""

import pytest

from ordext.contours import FiniteSampleOracle, PartialUtility
from ordext.extreal import NEG_INF, POS_INF, ExtReal
from ordext.fixtures import example_gap, example_nin, get_fixture
from ordext.monotonicity import check_gap_safe_probes
from ordext.orders import BOTTOM, TOP, interior


def test_registry_lookup():
    assert get_fixture("example-gap").name == "example-gap"
    with pytest.raises(KeyError, match="unknown fixture"):
        get_fixture("nope")


def test_gap_fixture_bound_values():
    fx = example_gap()
    assert fx.lower_sup((0.0,)) == ExtReal(0.0)
    assert fx.upper_inf((1.0,)) == ExtReal(0.0)
    assert fx.lower_sup((-2.5,)) == ExtReal(-2.5)
    assert fx.upper_inf((3.0,)) == ExtReal(2.0)
    assert fx.lower_sup((0.5,)) == ExtReal(0.0)
    assert fx.lower_sup(BOTTOM) == NEG_INF
    assert fx.upper_inf(TOP) == POS_INF
    assert fx.upper_inf(BOTTOM) == NEG_INF
    assert fx.lower_sup(TOP) == POS_INF


def test_gap_fixture_is_refuted_at_the_gap_pair():
    fx = example_gap()
    verdict = check_gap_safe_probes(fx, fx.probes)
    assert not verdict.holds
    assert verdict.witness.lo == interior((0.0,))
    assert verdict.witness.hi == interior((1.0,))


def test_gap_fixture_closed_form_matches_sampled_enumeration():
    # truncate the infinite sample set and compare against enumeration;
    # inside the sampled range the closed form must agree exactly
    fx = example_gap()
    pts = [(-3.0 + 0.25 * i,) for i in range(25) if -3.0 + 0.25 * i <= 0.0]
    pts += [(1.0 + 0.25 * i,) for i in range(1, 17)]
    samples = PartialUtility({p: fx.sample_value(p) for p in pts})
    oracle = FiniteSampleOracle(fx.ambient, samples)
    for q in [(-2.0,), (-0.5,), (0.0,), (0.25,), (0.5,), (1.25,), (2.0,), (3.5,)]:
        assert oracle.lower_sup(q) == fx.lower_sup(q)


def test_gap_fixture_sample_membership_and_values():
    fx = example_gap()
    assert fx.in_samples((-1.0,)) and fx.in_samples((2.0,))
    assert not fx.in_samples((0.5,))
    assert fx.sample_value((-1.0,)) == -1.0
    assert fx.sample_value((2.0,)) == 1.0
    with pytest.raises(KeyError):
        fx.sample_value((0.5,))


def test_nin_fixture_bound_values():
    fx = example_nin()
    assert fx.lower_sup(0) == POS_INF
    assert fx.upper_inf(0) == POS_INF
    assert fx.lower_sup(-4) == ExtReal(4.0)
    assert fx.upper_inf(-4) == ExtReal(4.0)
    assert fx.upper_inf(BOTTOM) == ExtReal(1.0)
    assert fx.lower_sup(BOTTOM) == NEG_INF
    assert fx.upper_inf(TOP) == POS_INF
    assert fx.lower_sup(TOP) == POS_INF


def test_nin_fixture_refuted_only_at_the_top_pair():
    fx = example_nin()
    verdict = check_gap_safe_probes(fx, fx.probes)
    assert not verdict.holds
    assert verdict.witness.lo == interior(0)
    assert verdict.witness.hi == TOP
    # interior strict pairs alone do not refute
    interior_probes = [(x, y) for x, y in fx.probes if y != TOP]
    assert check_gap_safe_probes(fx, interior_probes).holds


def test_nin_order_shape():
    fx = example_nin()
    rel = fx.ambient
    assert rel.geq(0, -7)
    assert not rel.geq(-7, 0)
    assert not rel.geq(-1, -2)
    assert rel.geq(-3, -3)


def test_nin_closed_form_matches_sampled_enumeration():
    fx = example_nin()
    pts = list(range(-1, -30, -1))
    samples = PartialUtility({p: fx.sample_value(p) for p in pts})
    oracle = FiniteSampleOracle(fx.ambient, samples)
    for q in (-1, -10, -29):
        assert oracle.lower_sup(q) == fx.lower_sup(q)
        assert oracle.upper_inf(q) == fx.upper_inf(q)
    # at zero the truncated sup is finite but grows with the truncation;
    # the upper contour is genuinely empty at every truncation
    assert oracle.lower_sup(0) == ExtReal(29.0)
    assert oracle.upper_inf(0) == POS_INF


def test_fixture_occupancy():
    fx = example_nin()
    assert fx.contour_occupancy(0) == (True, False)
    assert fx.contour_occupancy(-3) == (True, True)
    assert fx.contour_occupancy(BOTTOM) == (False, True)
    gap = example_gap()
    assert gap.contour_occupancy((0.5,)) == (True, True)
