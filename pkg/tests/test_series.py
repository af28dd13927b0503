import math

import mpmath as mp
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from srho.errors import (
    BadOrder, NonzeroConstantTerm, OutsideAccuracyDomain, ParamOutOfDomain, ROutOfRange,
    SigmaOutOfRange,
)
from srho.series import (
    FamilySpec, TaylorSeries, build_phi_n, build_rho_series, family_series, growth_distortion,
    phi_real, series_eval, series_exp, si_series,
)

mp.mp.dps = 30


def test_taylor_series_invariants():
    s = TaylorSeries.zeros(5)
    assert s.order == 5 and len(s.coeffs) == 6
    with pytest.raises(ValueError):
        TaylorSeries([1.0, float("nan")])
    s = TaylorSeries([0, 1, 0.5j, 2])
    assert TaylorSeries.from_json(s.to_json()) == s


def test_json_is_index_by_power_pairs():
    import json
    assert json.loads(TaylorSeries([0, 1, 2j]).to_json()) == [[0, 0], [1, 0], [0, 2]]


def test_series_exp_examples():
    assert np.allclose(series_exp(TaylorSeries.zeros(6)).coeffs, [1, 0, 0, 0, 0, 0, 0])
    g = series_exp(TaylorSeries.monomial(1, 12))
    assert np.allclose(g.coeffs, [1 / math.factorial(k) for k in range(13)], atol=1e-15)
    s = TaylorSeries.monomial(1, 32, 0.5) + TaylorSeries.monomial(2, 32, 1 / 48)
    g = series_exp(s)
    assert g[2] == pytest.approx(7 / 48, abs=1e-15)
    for z in 0.5 * np.exp(2j * np.pi * np.arange(20) / 20) * np.linspace(0.1, 1, 20):
        assert abs(g.horner(z) - np.exp(z / 2 + z * z / 48)) <= 1e-12


def test_series_exp_rejects_constant_term():
    with pytest.raises(NonzeroConstantTerm):
        series_exp(TaylorSeries([1.0, 1.0]))


@settings(max_examples=50, deadline=None)
@given(st.lists(st.complex_numbers(max_magnitude=2, allow_nan=False, allow_infinity=False),
                min_size=1, max_size=8))
def test_exp_log_consistency(tail):
    s = TaylorSeries([0, *tail, *([0] * (16 - len(tail)))])
    prod = series_exp(s) * series_exp(-s)
    scale = max(1.0, max(abs(c) for c in series_exp(s).coeffs))
    assert abs(prod[0] - 1) <= 1e-12
    assert np.max(np.abs(prod.coeffs[1:])) <= 1e-12 * scale**2


def test_rho_series_examples():
    assert np.allclose(build_rho_series(1, 3).coeffs, [1, 1 / 2, 1 / 24, 1 / 720], atol=0)
    assert build_rho_series(-1, 10) == build_rho_series(1, 10)
    assert build_rho_series(0.5)[1] == pytest.approx(0.125)
    for bad in (0.0, 1.6, -2.0):
        with pytest.raises(SigmaOutOfRange):
            build_rho_series(bad)


def test_phi_n_examples():
    assert build_phi_n(2)[2] == pytest.approx(0.5, abs=1e-15)
    p3 = build_phi_n(3)
    assert p3[2] == 0 and p3[3] == pytest.approx(0.25, abs=1e-15)
    # cross term of the square adds 1/8 to the displayed 1/48
    assert build_phi_n(2)[3] == pytest.approx(7 / 48, abs=1e-15)
    with pytest.raises(BadOrder):
        build_phi_n(4, 3)
    with pytest.raises(ParamOutOfDomain):
        build_phi_n(1)


def test_phi_n_against_mpmath_taylor():
    for n in (2, 3, 4):
        ref = mp.taylor(lambda z: z * mp.exp(mp.quad(
            lambda t: (mp.cosh(mp.sqrt(t ** (n - 1))) - 1) / t, [0, z])), 0, 8)
        ours = build_phi_n(n, 8).coeffs
        assert np.allclose(ours.real, [float(c) for c in ref], atol=1e-12)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_phi_derivative_identity(n):
    N = 32
    g = TaylorSeries(build_phi_n(n, N).coeffs[1:])  # phi = z g
    q = 1 + g.derivative().shift(1).truncate(N - 1) / g
    expected = build_rho_series(1, N).compose_power(n - 1)
    assert np.allclose(q.coeffs[:N - n + 1], expected.coeffs[:N - n + 1], atol=1e-12)


def test_phi_coefficient_bounds():
    c = build_phi_n(2).coeffs
    assert abs(c[2]) == pytest.approx(0.5) and abs(c[3]) <= 0.25 and abs(c[4]) <= 1 / 6


def test_family_examples():
    for A in (-0.7, 0.3, 1.0):
        c = family_series(FamilySpec("HalfKoebe", A=A), 16).coeffs
        assert np.allclose(c[1:], [A ** (k - 1) for k in range(1, 17)], atol=1e-15)
    assert family_series(FamilySpec("Fun2"))[2] == pytest.approx(1 / 3, abs=1e-15)
    assert np.allclose(family_series(FamilySpec("TildeCubic"), 6).coeffs, [0, 1, 0, 0.25, 0, 0, 0])


def test_half_koebe_real_axis():
    s = family_series(FamilySpec("HalfKoebe", A=0.5), 32)
    for x in np.linspace(0, 0.9, 19):
        assert abs(s.horner(x) - x / (1 - 0.5 * x)) <= 1e-10


def test_si_series_against_scipy_free_oracle():
    s = si_series(1 / 3, 20)
    for z in (0.3, 0.7j, -0.5 + 0.2j):
        assert abs(s.horner(z) - complex(mp.si(z / 3))) <= 1e-14


def test_family_domains():
    with pytest.raises(ParamOutOfDomain):
        FamilySpec("JanowskiExtremal", A=0.2, B=0.5)
    with pytest.raises(ParamOutOfDomain):
        FamilySpec("Nope")
    with pytest.raises(ParamOutOfDomain):
        FamilySpec("MonomialPerturb", n=2, a=1.2)
    with pytest.raises(ParamOutOfDomain):
        FamilySpec("MBetaExtremal", beta=0.5)


SPECS = [
    FamilySpec("PhiN", n=2), FamilySpec("PhiN", n=3), FamilySpec("MonomialPerturb", n=3, a=0.2),
    FamilySpec("KoebeType", A=0.4), FamilySpec("HalfKoebe", A=-0.6), FamilySpec("ExpLine", A=0.7),
    FamilySpec("F1Witness", n=2, beta=0.5), FamilySpec("F1Witness", n=1, beta=0.0),
    FamilySpec("F1ZeroWitness", n=2), FamilySpec("F1HalfWitness", n=1), FamilySpec("F2Witness", n=3),
    FamilySpec("F3Witness", n=2, A=0.5), FamilySpec("JanowskiExtremal", n=2, A=0.5, B=-0.5),
    FamilySpec("JanowskiExtremal", n=1, A=0.5, B=0.0), FamilySpec("MBetaExtremal", n=1, beta=1.5),
    FamilySpec("Fun1"), FamilySpec("Fun2"), FamilySpec("TildeCubic"),
]


@pytest.mark.parametrize("spec", SPECS, ids=lambda s: s.label)
def test_series_matches_closed_form(spec):
    s = family_series(spec, 48)
    z = 0.45 * np.exp(1j * np.linspace(0, 2 * np.pi, 13))
    assert np.allclose(s.horner(z), z * spec.ratio(z), atol=1e-12, rtol=0)


@pytest.mark.parametrize("spec", SPECS, ids=lambda s: s.label)
def test_logderiv_matches_numerical_derivative(spec):
    # oracle: z f'/f by mpmath differentiation of the closed form f = z * ratio
    for z0 in (0.3 + 0.1j, -0.2 + 0.25j):
        f = lambda x: complex(x) * complex(spec.ratio(complex(x)))
        d = mp.diff(lambda x: mp.mpc(f(x)), mp.mpc(z0), h=mp.mpf("1e-6"))
        ref = complex(z0) * complex(d) / f(z0)
        assert abs(complex(spec.logderiv(z0)) - ref) <= 1e-8


def test_series_eval():
    s = build_rho_series(1)
    assert series_eval(s, 0) == s[0]
    assert series_eval(s, 0.25) == pytest.approx(math.cosh(0.5), abs=1e-15)
    assert series_eval(s, 0.25, derivative=1) == pytest.approx(
        math.sinh(0.5) / (2 * 0.5), abs=1e-14)
    with pytest.raises(OutsideAccuracyDomain):
        series_eval(s, 0.96)


def test_phi_at_half_against_quadrature():
    ref = 0.5 * mp.exp(mp.quad(lambda t: (mp.cosh(mp.sqrt(t)) - 1) / t, [0, 0.5]))
    assert abs(series_eval(build_phi_n(2), 0.5) - float(ref)) <= 1e-9
    assert phi_real(0.5) == pytest.approx(float(ref), abs=1e-12)


def test_growth_distortion():
    low, up, dlow, dup = growth_distortion(1.0)
    ref = mp.exp(mp.quad(lambda s: (mp.cos(mp.sqrt(s)) - 1) / s, [0, 1]))
    assert low == pytest.approx(float(ref), abs=1e-12)
    assert low == pytest.approx(0.6191, abs=1e-4)
    expo = sum(1 / (k * math.factorial(2 * k)) for k in range(1, 15))
    assert expo == pytest.approx(0.521300, abs=5e-6)
    assert up == pytest.approx(math.exp(expo), abs=1e-11)
    assert dup == pytest.approx(up * math.cosh(1), rel=1e-14)
    assert dlow == pytest.approx(low * math.cos(1), rel=1e-14)
    r = 1e-6
    low, up, *_ = growth_distortion(r)
    assert low / r == pytest.approx(1, abs=1e-6) and up / r == pytest.approx(1, abs=1e-6)
    for bad in (0.0, 1.5):
        with pytest.raises(ROutOfRange):
            growth_distortion(bad)


@settings(max_examples=30, deadline=None)
@given(st.floats(0.01, 1.0))
def test_growth_ordering(r):
    low, up, dlow, dup = growth_distortion(r)
    assert 0 < dlow <= 1 <= dup
    assert low <= r <= up
