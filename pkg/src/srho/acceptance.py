"""The eight acceptance checks, runnable from tests and from ``srho suite``.

Each check returns a :class:`CriterionResult`; failures keep the list of
offending cases in ``failures`` so a red line explains itself.
"""
from __future__ import annotations

import math
import time
from dataclasses import dataclass, field

import numpy as np

from . import criteria, radii, region, series, verify
from .region import C0, C1


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    summary: str
    failures: list = field(default_factory=list)
    seconds: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        out = f"criterion {self.number} [{status}] {self.name}: {self.summary} ({self.seconds:.2f}s)"
        if self.failures:
            out += " | failing: " + "; ".join(self.failures)
        return out

    def to_dict(self) -> dict:
        return {
            "criterion": self.number,
            "name": self.name,
            "pass": self.passed,
            "summary": self.summary,
            "failures": list(self.failures),
        }


def _close(value: float, target: float, tol: float) -> bool:
    return abs(value - target) <= tol


def criterion_1() -> CriterionResult:
    t0 = time.perf_counter()
    m, t2 = region.max_argument(1.0)
    gamma0, tau = region.st_p_gamma()
    low = series.growth_distortion(1.0)[0]
    beta = m / (math.pi / 2)
    checks = {
        "m": (m, 0.506053, 1e-4),
        "t2": (t2, 1.91672, 1e-3),
        "gamma0": (gamma0, 0.0654238, 1e-5),
        "tau": (tau, 0.832934, 1e-3),
        "-phi(-1)": (low, 0.619, 1e-3),
        "beta": (beta, 0.322163, 1e-4),
    }
    fails = [f"{k}={v:.8g} (want {w} +- {e:g})" for k, (v, w, e) in checks.items() if not _close(v, w, e)]
    dt = time.perf_counter() - t0
    if dt >= 5:
        fails.append(f"runtime {dt:.2f}s >= 5s")
    summary = ", ".join(f"{k}={v:.7g}" for k, (v, _w, _e) in checks.items())
    return CriterionResult(1, "region constants", not fails, summary, fails, dt)


def criterion_2() -> CriterionResult:
    t0 = time.perf_counter()
    theta = 2 * np.pi * np.arange(720) / 720
    e = np.exp(1j * theta)
    fails, total = [], 0
    for sigma in (0.5, 1.0, math.pi / 2):
        sig = region.Sigma(sigma)
        for c in np.linspace(sig.lo + 1e-3, sig.hi - 1e-3, 50):
            r = region.inscribed_radius(sig, c).radius
            inside = region.contains(sig, c + r * (1 - 1e-6) * e)
            outside = region.contains(sig, c + r * (1 + 1e-3) * e)
            total += 1
            if not np.all(inside) or np.all(outside):
                fails.append(f"sigma={sigma:.4g}, c={c:.6g}")
    dt = time.perf_counter() - t0
    return CriterionResult(2, "inscribed disc", not fails, f"{total} centres probed", fails, dt)


def criterion_3(points: int = 10_000, seed: int = 20240611) -> CriterionResult:
    t0 = time.perf_counter()
    rng = np.random.default_rng(seed)
    fails, excluded = [], 0
    for sigma in (0.5, 1.0):
        sig = region.Sigma(sigma)
        poly = verify.boundary_polygon(sig, 4096)
        ymax = float(np.max(poly.imag))
        x = rng.uniform(sig.lo - 0.05, sig.hi + 0.05, points)
        y = rng.uniform(-ymax - 0.05, ymax + 0.05, points)
        u = x + 1j * y
        keep = verify.polygon_distance(u, poly) > 1e-4
        excluded += int(np.sum(~keep))
        analytic = region.contains(sig, u[keep])
        wind = verify.winding_number(u[keep], poly) != 0
        bad = int(np.sum(analytic != wind))
        if bad:
            fails.append(f"sigma={sigma}: {bad} disagreements")
    dt = time.perf_counter() - t0
    summary = f"2 x {points} points, {excluded} within the boundary band skipped"
    return CriterionResult(3, "membership vs winding number", not fails, summary, fails, dt)


JANOWSKI_GRID = [(A, B) for A in (0.2, 0.4, 0.6, 0.8, 1.0) for B in (-1.0, -0.5, -0.1, 0.0, 0.1)]


def criterion_4() -> CriterionResult:
    t0 = time.perf_counter()
    fails, n_checked = [], 0
    for zeta in np.linspace(C0, 0.99, 7):
        rep = radii.starlike_order_radius(float(zeta))
        n_checked += 1
        if rep.residual > 1e-10:
            fails.append(f"r_zeta({zeta:.4g}) residual {rep.residual:.2e}")
    for beta in np.linspace(1.01, C1 - 1e-3, 7):
        rep = radii.mbeta_radius(float(beta))
        n_checked += 1
        if rep.residual > 1e-10:
            fails.append(f"r_beta({beta:.4g}) residual {rep.residual:.2e}")
    for alpha in np.linspace(0.0, 0.95, 7):
        rep = radii.convexity_radius(float(alpha))
        n_checked += 1
        if rep.residual > 1e-10:
            fails.append(f"r0({alpha:.3g}) residual {rep.residual:.2e}")

    def compare(label, closed, disc):
        nonlocal n_checked
        n_checked += 1
        bis = radii.disc_radius(disc)
        if abs(closed - bis) > 1e-6:
            fails.append(f"{label}: closed {closed:.7f} vs bisection {bis:.7f}")

    for A, B in JANOWSKI_GRID:
        rep = radii.janowski_radius(radii.JanowskiParams(A, B, 1))
        compare(f"Janowski({A},{B})", rep.radius, lambda r, A=A, B=B: radii.janowski_disc(A, B, 1, r))
    for beta in (1.1, C1, 2.0):
        rep = radii.mn_beta_radius(beta, 1)
        compare(f"M1({beta:.4g})", rep.radius, lambda r, b=beta: radii.mn_beta_disc(b, 1, r))
    for klass in radii.RATIO_CLASSES:
        for n in (1, 2, 3):
            rep = radii.ratio_class_radius(klass, n)
            compare(f"{klass} n={n}", rep.radius, lambda r, k=klass, n=n: radii.ratio_class_disc(k, n, r))
    dt = time.perf_counter() - t0
    return CriterionResult(4, "radius residuals and disc bisection", not fails,
                           f"{n_checked} radii checked", fails, dt)


def sharpness_reports() -> list:
    reps = [
        radii.starlike_order_radius(math.cos(0.5)),
        radii.starlike_order_radius(0.7),
        radii.mbeta_radius(math.cosh(0.8)),
        radii.mbeta_radius(2.0),
    ]
    for A, B, n in ((1.0, 0.0, 1), (0.5, 0.25, 2), (0.5, -0.5, 1), (1.0, -1.0, 1), (0.8, -0.5, 2)):
        reps.append(radii.janowski_radius(radii.JanowskiParams(A, B, n)))
    for beta, n in ((1.1, 1), (C1, 1), (2.0, 2)):
        reps.append(radii.mn_beta_radius(beta, n))
    for klass in radii.RATIO_CLASSES:
        for n in (1, 2, 3):
            reps.append(radii.ratio_class_radius(klass, n))
    for A, n in ((1.0, 1), (-C0, 2), (-1.0, 1), (0.0, 3)):
        reps.append(radii.f3_radius(A, n))
    return reps


def criterion_5() -> CriterionResult:
    t0 = time.perf_counter()
    fails = []
    reps = sharpness_reports()
    for rep in reps:
        res = verify.sharpness_probe(rep)
        if not res.passed:
            d = res.details
            why = "containment" if not d["inside"] else f"no escape (max level {d['max_level_out']:.4f})"
            fails.append(f"{rep.klass} {rep.params}: {why}")
    rep = radii.starlike_order_radius(math.cos(0.5))
    w = rep.extremal.logderiv(np.array([-rep.radius]))[0]
    if abs(w.real - math.cos(0.5)) > 1e-8:
        fails.append(f"Re(z phi'/phi) at -r_zeta = {w.real!r}")
    dt = time.perf_counter() - t0
    return CriterionResult(5, "sharpness", not fails, f"{len(reps)} radius reports probed", fails, dt)


def criterion_6() -> CriterionResult:
    t0 = time.perf_counter()
    fails = []
    a = np.abs(series.build_phi_n(2, 32).coeffs)
    if not _close(a[2], 0.5, 1e-12):
        fails.append(f"|a2|={a[2]!r}")
    if not a[3] <= 0.25:
        fails.append(f"|a3|={a[3]!r}")
    if not a[4] <= 1 / 6 + 1e-12:
        fails.append(f"|a4|={a[4]!r}")
    tilde = series.coefficients(series.FamilySpec("TildeCubic"), 8)
    fs = abs(tilde[3] - 0 * tilde[2] ** 2)
    if not _close(fs, criteria.fekete_szego_bound(0), 1e-15) or not _close(fs, 0.25, 1e-15):
        fails.append(f"Fekete-Szego value {fs!r}")
    for n in range(2, 6):
        ok, lhs, rhs = criteria.coeff_l2_check(criteria.CoeffList.from_series(series.build_phi_n(n, 32).coeffs))
        if not ok:
            fails.append(f"L2 n={n}: {lhs:.6g} > {rhs:.6g}")
    dt = time.perf_counter() - t0
    summary = f"|a2|={a[2]:.15g}, |a3|={a[3]:.6g}, |a4|={a[4]:.6g}, FS={fs:.6g}"
    return CriterionResult(6, "coefficient bounds", not fails, summary, fails, dt)


def criterion_7() -> CriterionResult:
    t0 = time.perf_counter()
    fails = []
    plan = verify.SamplingPlan(angles=1024)
    kappa = 1 - C0**2
    if not verify.verify_region_inclusion(verify.SqrtKappa(kappa), 1.0, plan).passed:
        fails.append("SqrtKappa(1 - c0^2) not inside")
    if verify.verify_region_inclusion(verify.SqrtKappa(kappa + 0.02), 1.0, plan).passed:
        fails.append("SqrtKappa(1 - c0^2 + 0.02) inside")
    ell = verify.verify_region_inclusion(
        verify.EllipseK(C1 / (C1 - 1)), 1.0, verify.SamplingPlan(angles=1024, margin_in=1e-6))
    if not ell.passed:
        fails.append(f"ellipse worst margin {ell.worst_margin:.3g}")
    gamma0, _ = region.st_p_gamma()
    if not verify.verify_region_inclusion(verify.Parabola(gamma0 + 1e-4), 1.0, plan).passed:
        fails.append("parabola gamma0 + 1e-4 does not contain the region")
    if verify.verify_region_inclusion(verify.Parabola(gamma0 - 1e-3), 1.0, plan).passed:
        fails.append("parabola gamma0 - 1e-3 still contains the region")
    dt = time.perf_counter() - t0
    return CriterionResult(7, "inclusion thresholds", not fails,
                           f"gamma0={gamma0:.7g}, ellipse margin {ell.worst_margin:.2g}", fails, dt)


def criterion_8() -> CriterionResult:
    t0 = time.perf_counter()
    fails, rows = [], []
    for fam in radii.THRESHOLD_FAMILIES:
        th = radii.family_threshold(fam)
        for factor, expect in ((0.99, True), (1.05, False)):
            spec = radii.threshold_family(fam, th * factor)
            sub = verify.verify_subordination(spec).passed
            cl = criteria.CoeffList.from_series(series.coefficients(spec, 32))
            conv = criteria.convolution_nonvanishing(cl).passed
            formula = th * factor <= th
            rows.append((fam, factor, sub, conv, formula))
            if not (sub == conv == formula == expect):
                fails.append(f"{fam} x{factor}: sampling={sub}, convolution={conv}, formula={formula}")
    dt = time.perf_counter() - t0
    return CriterionResult(8, "criteria consistency", not fails,
                           f"{len(rows)} family/parameter cases", fails, dt)


CRITERIA = {
    1: criterion_1, 2: criterion_2, 3: criterion_3, 4: criterion_4,
    5: criterion_5, 6: criterion_6, 7: criterion_7, 8: criterion_8,
}


def run_criterion(number: int) -> CriterionResult:
    return CRITERIA[number]()


def run_all() -> list[CriterionResult]:
    return [fn() for fn in CRITERIA.values()]
