import math

import mpmath as mp
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from srho.errors import COutOfRange, HplDomain, SigmaOutOfRange
from srho.numerics import NumericConfig
from srho.region import (
    C0, C1, CONSTANTS, Disc, Sigma, boundary_csv, boundary_point, boundary_samples, boundary_xy,
    contains, critical_point_residual, distance_sq, distance_sq_derivative, eval_rho,
    gc_interior_critical_points, grid_inscribed_radius, hpl_threshold, imag_extent,
    inclusion_thresholds, inscribed_radius, level, max_argument, max_imag, st_p_gamma,
)

mp.mp.dps = 30
RNG_SEED = 20240917


def test_constants():
    assert 0.5403 < CONSTANTS.c0 < 0.5404 and 1.5430 < CONSTANTS.c1 < 1.5431
    assert (C0, C1) == (math.cos(1), math.cosh(1))


def test_sigma_canonicalisation():
    assert Sigma(-0.7).value == 0.7
    for bad in (0.0, 1.6, -2.0, float("nan")):
        with pytest.raises(SigmaOutOfRange):
            Sigma(bad)
    assert Sigma(math.pi / 2).value == math.pi / 2


def test_disc_invariant():
    with pytest.raises(ValueError):
        Disc(1.0, -0.1)


def test_eval_rho_examples():
    assert eval_rho(1, 0) == 1
    assert eval_rho(1, 1) == pytest.approx(math.cosh(1), abs=1e-15)
    assert eval_rho(1, -1) == pytest.approx(math.cos(1), abs=1e-15)
    assert eval_rho(1, 1e-10) == pytest.approx(1 + 0.5e-10, abs=1e-20)


def test_contains_examples():
    assert contains(1, 1.0)
    assert not contains(1, 1.6)
    u = eval_rho(1, 0.5)
    assert u == pytest.approx(1.26059, abs=1e-5) and contains(1, u)


def test_membership_against_mpmath_acosh():
    rng = np.random.default_rng(RNG_SEED)
    us = rng.uniform(-1, 3, 200) + 1j * rng.uniform(-1.5, 1.5, 200)
    for u in us:
        # acosh is even up to sign, so |acosh| picks the branch-free modulus
        ref = abs(mp.acosh(mp.mpc(u)))
        assert level(1, u) == pytest.approx(float(ref), rel=1e-12)


def test_boundary_point_examples():
    for s in (0.3, 1.0, math.pi / 2):
        p = boundary_point(s, 0.0)
        assert (p.x, p.y) == pytest.approx((math.cosh(s), 0.0))
        p = boundary_point(s, math.pi)
        assert p.x == pytest.approx(math.cos(s), abs=1e-15) and p.y == pytest.approx(0, abs=1e-15)
    assert abs(boundary_point(1, math.pi / 2).u - eval_rho(1, 1j)) <= 1e-12


@settings(max_examples=50, deadline=None)
@given(s=st.floats(0.05, math.pi / 2), t=st.floats(-math.pi, math.pi))
def test_boundary_properties(s, t):
    p, q = boundary_point(s, t), boundary_point(s, -t)
    assert p.y == pytest.approx(-q.y, abs=1e-15)
    assert abs(p.u - eval_rho(s, np.exp(1j * t))) <= 1e-12
    assert level(s, p.u) == pytest.approx(1.0, abs=1e-9)


def test_boundary_csv_format():
    text = boundary_csv(1, 4)
    lines = text.splitlines()
    assert lines[0] == "t,x,y" and len(lines) == 5
    t, x, y = boundary_samples(1, 4)
    assert lines[1].split(",") == [format(v, ".17g") for v in (t[0], x[0], y[0])]
    assert float(lines[1].split(",")[0]) == -math.pi


def test_forward_inverse_consistency():
    rng = np.random.default_rng(RNG_SEED)
    for s in (0.4, 1.0, math.pi / 2):
        r = 0.999 * np.sqrt(rng.uniform(0, 1, 10_000))
        z = r * np.exp(2j * np.pi * rng.uniform(0, 1, 10_000))
        assert np.all(contains(s, eval_rho(s, z)))
        r = rng.uniform(1.001, 2.0, 10_000)
        z = r * np.exp(2j * np.pi * rng.uniform(0, 1, 10_000))
        assert not np.any(contains(s, eval_rho(s, z)))


@settings(max_examples=100, deadline=None)
@given(x=st.floats(-3, 3), y=st.floats(-3, 3), s=st.floats(0.05, math.pi / 2))
def test_conjugate_symmetry(x, y, s):
    z = complex(x, y)
    assert abs(eval_rho(s, z.conjugate()) - eval_rho(s, z).conjugate()) <= 1e-14 * max(1, abs(eval_rho(s, z)))


def test_monotone_in_sigma():
    grid = np.linspace(0.1, math.pi / 2, 12)
    for s, s_hat in zip(grid[:-1], grid[1:]):
        _t, x, y = boundary_samples(s, 720)
        assert np.all(contains(s_hat, x + 1j * y, margin_out=1e-9))


@pytest.mark.parametrize("s", [0.5, 1.0, math.pi / 2])
def test_inscribed_disc_correctness(s):
    sig = Sigma(s)
    th = np.exp(2j * np.pi * np.arange(720) / 720)
    for c in np.linspace(sig.lo + 1e-3, sig.hi - 1e-3, 50):
        r = inscribed_radius(sig, c).radius
        assert np.all(contains(sig, c + r * (1 - 1e-6) * th))
        assert not np.all(contains(sig, c + r * (1 + 1e-3) * th))


def test_inscribed_radius_examples():
    assert inscribed_radius(1, 1.0).radius == pytest.approx(1 - math.cos(1), abs=1e-15)
    assert inscribed_radius(1, 1.0).radius == pytest.approx(0.459698, abs=1e-6)
    mid = (C0 + C1) / 2
    assert inscribed_radius(1, mid).radius == pytest.approx((C1 - C0) / 2, abs=1e-15)
    d = inscribed_radius(1, 1.3)
    assert d.radius == pytest.approx(0.243081, abs=1e-6)
    assert d.radius == pytest.approx(grid_inscribed_radius(1, 1.3), abs=1e-8)
    for bad in (0.5, C0, C1, 2.0):
        with pytest.raises(COutOfRange):
            inscribed_radius(1, bad)


def test_distance_sq_examples():
    c = 1.2
    assert distance_sq(1, c, math.pi / 2) == pytest.approx((c - C0) ** 2, abs=1e-15)
    assert distance_sq(1, c, 0.0) == pytest.approx((c - C1) ** 2, abs=1e-15)
    with pytest.raises(COutOfRange):
        distance_sq(1, 1.7, 0.3)


def test_distance_sq_derivative_against_mpmath():
    g = lambda t: (1.1 - mp.cosh(mp.cos(t)) * mp.cos(mp.sin(t))) ** 2 + \
        mp.sinh(mp.cos(t)) ** 2 * mp.sin(mp.sin(t)) ** 2
    for tau in (0.2, 0.7, 1.3):
        assert distance_sq_derivative(1, 1.1, tau) == pytest.approx(float(mp.diff(g, tau)), abs=1e-12)


def test_interior_critical_point_near_midpoint():
    roots = gc_interior_critical_points(1, 1.042)
    assert len(roots) == 1
    tau = roots[0]
    assert 0 < tau < math.pi / 2
    assert abs(critical_point_residual(1, 1.042, tau)) <= 1e-9
    # dense grid oracle: G_c has a local maximum there
    grid = np.linspace(0, math.pi / 2, 200_001)
    vals = distance_sq(1, 1.042, grid)
    interior = np.nonzero((vals[1:-1] > vals[:-2]) & (vals[1:-1] > vals[2:]))[0] + 1
    assert len(interior) == 1 and grid[interior[0]] == pytest.approx(tau, abs=1e-5)
    assert gc_interior_critical_points(1, 0.6) == [] and gc_interior_critical_points(1, 1.5) == []


def test_max_argument():
    m, t = max_argument(1)
    assert m == pytest.approx(0.506053, abs=1e-5) and t == pytest.approx(1.91672, abs=1e-4)
    assert max_argument(-1) == max_argument(1)
    # oracle: the derivative root at 30 digits
    f = lambda t: mp.atan(mp.tan(mp.sin(t / 2)) * mp.tanh(mp.cos(t / 2)))
    t_ref = mp.findroot(lambda t: mp.diff(f, t), 1.9)
    assert t == pytest.approx(float(t_ref), abs=1e-7)
    assert m == pytest.approx(float(f(t_ref)), abs=1e-12)


def test_max_argument_at_largest_sigma():
    # the supremum pi/2 is approached as t -> pi, so any grid stays just below it
    m, t = max_argument(math.pi / 2)
    t_grid = np.linspace(0, math.pi, 10**6 + 1)[:-1]
    a, b = math.pi / 2 * np.sin(t_grid / 2), math.pi / 2 * np.cos(t_grid / 2)
    grid_max = np.max(np.arctan2(np.sin(a) * np.sinh(b), np.cos(a) * np.cosh(b)))
    assert grid_max - 1e-12 <= m <= math.pi / 2
    assert m == pytest.approx(math.pi / 2, abs=1e-8)


def test_imag_extent():
    l, t0 = imag_extent(1)
    res = C0 + C1 - 2 * math.cos(math.sin(t0 / 2)) * math.cosh(math.cos(t0 / 2))
    assert abs(res) <= 1e-10
    assert imag_extent(-1) == (l, t0)
    # boundary-scan oracle: interpolate |Y| where X crosses the midpoint
    t = np.linspace(0, math.pi, 400_001)
    x, y = boundary_xy(1, t)
    i = np.nonzero(np.diff(np.sign(x - (C0 + C1) / 2)))[0][0]
    w = (x[i] - (C0 + C1) / 2) / (x[i] - x[i + 1])
    assert l == pytest.approx(abs(y[i] + w * (y[i + 1] - y[i])), abs=1e-9)
    assert l == pytest.approx(0.5054746, abs=1e-7)
    # the chord height sits just below the overall top of the region
    top, _ = max_imag(1)
    assert l < top and float(np.max(y)) == pytest.approx(top, abs=1e-10)


def test_st_p_gamma():
    g, tau = st_p_gamma()
    assert g == pytest.approx(0.0654238, abs=1e-7) and tau == pytest.approx(0.832934, abs=1e-6)
    from srho.region import _h
    assert _h(0.0) == 0 and _h(math.pi / 2) == pytest.approx(0, abs=1e-30)


def test_inclusion_thresholds():
    rec = inclusion_thresholds(1)
    assert (rec.zeta, rec.beta) == (C0, C1)
    assert rec.kappa_max == pytest.approx(1 - C0**2)
    assert rec.k_min == pytest.approx(C1 / (C1 - 1))
    assert rec.s_L_min == pytest.approx(1 - math.sqrt(math.cos(1)), abs=1e-15)
    assert rec.s_L_min == pytest.approx(0.264947, abs=1e-6)
    assert hpl_threshold(math.pi / 3) == pytest.approx(1.0, abs=1e-14)
    with pytest.raises(HplDomain):
        hpl_threshold(1.2)
    assert inclusion_thresholds(1.2).s_hpl_min is None


def test_real_line_extremes():
    for s in (0.3, 1.0, math.pi / 2):
        eps = 1e-6
        assert contains(s, math.cos(s) + eps) and not contains(s, math.cos(s) - eps)
        assert contains(s, math.cosh(s) - eps) and not contains(s, math.cosh(s) + eps)


def test_grid_n_does_not_change_closed_forms():
    coarse = NumericConfig(grid_n=64)
    assert inscribed_radius(1, 1.3, coarse).radius == inscribed_radius(1, 1.3).radius
