import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from srho.criteria import (
    CoeffList, boundary_values, coeff_l2_check, coeff_sufficient, convolution_nonvanishing,
    fekete_szego_bound,
)
from srho.radii import THRESHOLD_FAMILIES, family_threshold, threshold_family
from srho.region import C0, C1
from srho.series import FamilySpec, build_phi_n, coefficients, family_series
from srho.verify import verify_subordination

A2_MAX = (1 - C0) / (2 - C0)


def test_coeff_list():
    c = CoeffList([0.3, 0, 1j])
    assert list(c.degrees) == [2, 3, 4]
    assert CoeffList.from_series([0, 1, 0.5]).a == (0.5 + 0j,)
    with pytest.raises(ValueError):
        CoeffList.from_series([0, 2, 0.5])
    with pytest.raises(ValueError):
        CoeffList([math.inf])


def test_boundary_values_are_on_the_region_boundary():
    from srho.region import level
    t, C = boundary_values(720)
    assert t[0] == -math.pi and t[-1] == math.pi
    assert np.allclose(level(1, C), 1.0, atol=1e-12)


def test_convolution_examples():
    rep = convolution_nonvanishing(CoeffList())
    assert rep.passed and rep.worst_margin == 1.0
    rep = convolution_nonvanishing(CoeffList([0.3]))
    assert rep.passed and rep.details["zeros_inside"] == 0
    rep = convolution_nonvanishing(CoeffList([0.9]))
    assert not rep.passed and rep.details["zeros_inside"] > 0
    with pytest.raises(ValueError):
        convolution_nonvanishing(CoeffList([0.1]), t_samples=10)


@settings(max_examples=30, deadline=None)
@given(a=st.floats(0.0, 0.6))
def test_convolution_quadratic_against_explicit_zero(a):
    # 1 - (2 - C) a z/(C - 1) vanishes at z = (C - 1)/((2 - C) a)
    if abs(a - A2_MAX) < 1e-3:
        return
    rep = convolution_nonvanishing(CoeffList([a]), t_samples=721, z_radii=16, z_angles=64)
    assert rep.passed == (a < A2_MAX)


def test_coeff_sufficient_examples():
    assert coeff_sufficient(CoeffList([0, 0])) == (True, 0.0)
    ok, worst = coeff_sufficient(CoeffList([0.3]))
    assert ok and worst == pytest.approx(0.3 * (2 - C0) / (1 - C0), abs=1e-12)
    assert not coeff_sufficient(CoeffList([0.32]))[0]
    assert A2_MAX == pytest.approx(0.31493, abs=1e-5)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.floats(-0.3, 0.3), min_size=1, max_size=6), st.floats(1.0, 3.0))
def test_coeff_sufficient_monotone_under_scaling(a, scale):
    before, w0 = coeff_sufficient(CoeffList(a))
    after, w1 = coeff_sufficient(CoeffList(np.asarray(a) * scale))
    assert w1 >= w0 - 1e-15
    assert not (not before and after)


@settings(max_examples=30, deadline=None)
@given(st.lists(st.floats(-0.06, 0.06), min_size=1, max_size=5))
def test_coeff_sufficient_implies_convolution(a):
    c = CoeffList(a)
    if coeff_sufficient(c)[0]:
        assert convolution_nonvanishing(c, t_samples=181, z_radii=16, z_angles=64).passed


def test_l2_examples():
    assert coeff_l2_check(CoeffList()) == (True, 0.0, C1**2 - 1)
    ok, lhs, rhs = coeff_l2_check(CoeffList([0, 0.25]))
    assert ok and lhs == pytest.approx((9 - C1**2) / 16, abs=1e-15)
    assert lhs == pytest.approx(0.41366, abs=5e-5)  # published decimal is off
    ok, lhs, rhs = coeff_l2_check(CoeffList([0, 0, 0, 0.9]))
    assert not ok and lhs == pytest.approx(18.32, abs=5e-3) and rhs == pytest.approx(1.3811, abs=1e-4)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_l2_passes_for_phi_truncations(n):
    for order in range(n, 13):
        assert coeff_l2_check(CoeffList.from_series(build_phi_n(n, order).coeffs))[0]


def test_fekete_szego_examples():
    assert fekete_szego_bound(7 / 12) == 0.25
    assert fekete_szego_bound(0) == 0.25
    a = family_series(FamilySpec("TildeCubic"), 4)
    assert a[2] == 0 and abs(a[3]) == pytest.approx(fekete_szego_bound(0))
    assert fekete_szego_bound(2) == pytest.approx(17 / 48, abs=1e-15)
    for th in np.linspace(0, 2 * np.pi, 10, endpoint=False):
        assert fekete_szego_bound(7 / 12 + np.exp(1j * th)) == pytest.approx(0.25, abs=1e-15)


def test_fekete_szego_holds_for_phi():
    c = build_phi_n(2).coeffs
    for mu in (0, 0.5, 1, -2, 3j):
        assert abs(c[3] - mu * c[2] ** 2) <= fekete_szego_bound(mu) + 1e-15


@pytest.mark.parametrize("family", THRESHOLD_FAMILIES)
def test_convolution_agrees_with_subordination_below_threshold(family):
    spec = threshold_family(family, 0.9 * family_threshold(family))
    conv = convolution_nonvanishing(CoeffList.from_series(coefficients(spec, 32)))
    assert conv.passed and verify_subordination(spec).passed
