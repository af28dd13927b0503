"""Sampling oracles for subordination, region inclusion and sharpness.

Every check reduces to a *level*: a real number that is below 1 inside the
target region, equals 1 on its boundary and exceeds 1 outside. A sample
passes containment when its level is at most ``1 + margin_in`` and counts as
an escape when its level exceeds ``1 + margin_out``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import TYPE_CHECKING

import numpy as np

from . import region
from .errors import BadParams
from .series import FamilySpec, TaylorSeries

if TYPE_CHECKING:
    from .radii import RadiusReport

DEFAULT_RADII = (0.1, 0.3, 0.5, 0.7, 0.9, 0.99, 0.999)


@dataclass(frozen=True)
class SamplingPlan:
    radii: tuple = DEFAULT_RADII
    angles: int = 1024
    margin_in: float = 1e-9
    margin_out: float = 1e-3

    def __post_init__(self):
        object.__setattr__(self, "radii", tuple(float(r) for r in self.radii))
        if not self.radii or not all(0 < r < 1 for r in self.radii):
            raise BadParams("sampling radii must lie in (0, 1)")
        if self.angles < 64:
            raise BadParams("need at least 64 angles per circle")

    def thetas(self) -> np.ndarray:
        return 2 * np.pi * np.arange(self.angles) / self.angles

    def points(self) -> np.ndarray:
        r = np.asarray(self.radii)
        return (r[:, None] * np.exp(1j * self.thetas())[None, :]).ravel()


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of a sampling check.

    ``worst_margin`` is ``1 - level`` at the worst sample, so it is negative
    exactly when that sample lies outside.
    """

    passed: bool
    worst_margin: float
    witness: complex | None
    samples_checked: int
    details: dict = field(default_factory=dict)
    inconclusive: bool = False

    def __post_init__(self):
        if (self.witness is None) != (self.samples_checked == 0):
            raise ValueError("witness must be present iff samples were checked")

    def __bool__(self):
        return self.passed

    def to_dict(self) -> dict:
        w = self.witness
        out = {
            "pass": self.passed,
            "worst_margin": self.worst_margin,
            "witness": None if w is None else [w.real, w.imag],
            "samples": self.samples_checked,
        }
        if self.inconclusive:
            out["inconclusive"] = True
        return out


def _report(levels: np.ndarray, points: np.ndarray, limit: float, **details) -> VerificationReport:
    i = int(np.argmax(levels))
    worst = float(levels[i])
    return VerificationReport(worst <= limit, 1.0 - worst, complex(points[i]), int(levels.size), details)


# --- target levels -------------------------------------------------------

def target_level(target: str, w, params: dict | None = None, sigma: float = 1.0) -> np.ndarray:
    """Level of ``w`` with respect to a named target region."""
    params = params or {}
    w = np.asarray(w, dtype=complex)
    if target == "omega":
        return region.level(sigma, w)
    if target == "re_gt":
        zeta = params["zeta"]
        return (1 - w.real) / (1 - zeta)
    if target == "re_lt":
        beta = params["beta"]
        return (w.real - 1) / (beta - 1)
    if target == "convex":
        alpha = params["alpha"]
        return (1 - w.real) / (1 - alpha)
    raise BadParams(f"unknown target {target!r}")


def convexity_expression(spec: FamilySpec, z, h: float = 1e-5) -> np.ndarray:
    """``1 + z f''/f'`` as ``p + z p'/p`` with ``p = zf'/f``; ``z p'`` by a radial central difference."""
    z = np.asarray(z, dtype=complex)
    p = spec.logderiv(z)
    zdp = (spec.logderiv(z * math.exp(h)) - spec.logderiv(z * math.exp(-h))) / (2 * h)
    return p + zdp / p


def _image(f, z: np.ndarray, target: str = "omega"):
    """``zf'/f`` (or ``1 + zf''/f'``) at ``z`` and ``|f(z)|``."""
    if isinstance(f, FamilySpec):
        absf = np.abs(z * f.ratio(z))
        w = convexity_expression(f, z) if target == "convex" else f.logderiv(z)
        return w, absf
    if isinstance(f, TaylorSeries):
        if target == "convex":
            raise BadParams("convexity targets need a closed-form family")
        c = f.coeffs
        if abs(c[0]) > 1e-14 or abs(c[1] - 1) > 1e-14:
            raise BadParams("series must satisfy f(0) = 0, f'(0) = 1")
        fz = f.horner(z)
        return z * f.derivative().horner(z) / fz, np.abs(fz)
    raise BadParams(f"unsupported function type {type(f).__name__}")


def verify_subordination(
    f: "FamilySpec | TaylorSeries", sigma: float = 1.0, plan: SamplingPlan = SamplingPlan(),
) -> VerificationReport:
    """Sampled containment of ``zf'/f`` over the plan's circles in the region.

    A sample where ``|f| < 1e-12`` makes the check inconclusive rather than failed.
    """
    z = plan.points()
    w, absf = _image(f, z)
    if np.any(absf < 1e-12):
        i = int(np.argmin(absf))
        return VerificationReport(False, math.nan, complex(z[i]), int(z.size),
                                  {"reason": "zero of f"}, inconclusive=True)
    levels = region.level(sigma, w)
    return _report(levels, z, 1 + plan.margin_in)


# --- region shapes -------------------------------------------------------

@dataclass(frozen=True)
class DiscRegion:
    c: complex
    r: float

    def boundary(self, t):
        return self.c + self.r * np.exp(1j * t)


@dataclass(frozen=True)
class JanowskiImage:
    """Image of the unit disc under ``(1 + Az)/(1 + Bz)``."""

    A: float
    B: float

    def __post_init__(self):
        if not -1 <= self.B < self.A <= 1:
            raise BadParams(f"need -1 <= B < A <= 1, got A={self.A}, B={self.B}")

    def boundary(self, t):
        e = np.exp(1j * t)
        with np.errstate(divide="ignore", invalid="ignore"):
            return (1 + self.A * e) / (1 + self.B * e)


@dataclass(frozen=True)
class SqrtKappa:
    """Image of the unit disc under ``sqrt(1 + kappa z)``."""

    kappa: float

    def __post_init__(self):
        if not 0 < self.kappa <= 1:
            raise BadParams(f"kappa must lie in (0, 1], got {self.kappa}")

    def boundary(self, t):
        return np.sqrt(1 + self.kappa * np.exp(1j * t))


@dataclass(frozen=True)
class EllipseK:
    """The ellipse ``Re u = k|u - 1|`` for ``k > 1``."""

    k: float

    def __post_init__(self):
        if not self.k > 1:
            raise BadParams(f"k must exceed 1, got {self.k}")

    def boundary(self, t):
        k2 = self.k**2 - 1
        x0, a, b = self.k**2 / k2, self.k / k2, 1 / math.sqrt(k2)
        return x0 + a * np.cos(t) + 1j * b * np.sin(t)


@dataclass(frozen=True)
class HplImage:
    """Image of the unit disc under ``(1 - z)^(-s)``, ``0 < s <= 1``."""

    s: float

    def __post_init__(self):
        if not 0 < self.s <= 1:
            raise BadParams(f"s must lie in (0, 1], got {self.s}")

    def level(self, u):
        return np.abs(1 - np.asarray(u, dtype=complex) ** (-1 / self.s))


@dataclass(frozen=True)
class LimaconImage:
    """Image of the unit disc under ``(1 + sz)^2``, ``0 < s <= 1/sqrt 2``."""

    s: float

    def __post_init__(self):
        if not 0 < self.s <= 1 / math.sqrt(2):
            raise BadParams(f"s must lie in (0, 1/sqrt 2], got {self.s}")

    def level(self, u):
        return np.abs(np.sqrt(np.asarray(u, dtype=complex)) - 1) / self.s


@dataclass(frozen=True)
class Parabola:
    """``|u - gamma| - Re u < gamma``, the interior of ``Im^2 = 4 gamma Re``."""

    gamma: float

    def __post_init__(self):
        if not self.gamma > 0:
            raise BadParams(f"gamma must be positive, got {self.gamma}")

    def level(self, u):
        u = np.asarray(u, dtype=complex)
        return (np.abs(u - self.gamma) - u.real) / self.gamma


INNER_SHAPES = (DiscRegion, JanowskiImage, SqrtKappa, EllipseK)
OUTER_SHAPES = (HplImage, LimaconImage, Parabola)


def verify_region_inclusion(
    shape, sigma: float = 1.0, plan: SamplingPlan = SamplingPlan(),
) -> VerificationReport:
    """Sampled inclusion between the region and ``shape``.

    Disc-like shapes (disc, Janowski image, sqrt(1 + kappa z), ellipse) are
    tested for lying inside the region. Hpl, limacon and parabola shapes are
    tested for containing the region.
    """
    t = -np.pi + 2 * np.pi * np.arange(plan.angles) / plan.angles
    if isinstance(shape, INNER_SHAPES):
        u = shape.boundary(t)
        with np.errstate(invalid="ignore"):
            levels = np.where(np.isfinite(u), region.level(sigma, u), np.inf)
        details = {"direction": "shape-in-region"}
        if isinstance(shape, DiscRegion) and shape.c.imag == 0:
            details["closed_form"] = region.disc_inside(sigma, shape.c.real, shape.r)
        return _report(levels, u, 1 + plan.margin_in, **details)
    if isinstance(shape, OUTER_SHAPES):
        x, y = region.boundary_xy(sigma, t)
        u = x + 1j * y
        return _report(shape.level(u), u, 1 + plan.margin_in, direction="region-in-shape")
    raise BadParams(f"unsupported shape {type(shape).__name__}")


# --- sharpness -----------------------------------------------------------

def circle_levels(report: "RadiusReport", r: float, angles: int, sigma: float = 1.0):
    z = r * np.exp(2j * np.pi * np.arange(angles) / angles)
    w, _ = _image(report.extremal, z, report.target)
    return target_level(report.target, w, report.params, sigma), z


def sharpness_probe(report: "RadiusReport", plan: SamplingPlan = SamplingPlan()) -> VerificationReport:
    """Containment just inside the radius and an escape just outside it.

    Inside is checked at ``radius*(1 - 1e-4)``; the escape at
    ``min(0.999, radius*(1 + 1e-2))``. At radius 1 only containment applies.
    """
    if report.extremal is None:
        raise BadParams(f"report for {report.klass!r} names no extremal function")
    r_in = report.radius * (1 - 1e-4)
    lv_in, z_in = circle_levels(report, r_in, plan.angles)
    inside = bool(np.max(lv_in) <= 1 + plan.margin_in)
    details = {"r_in": r_in, "inside": inside, "max_level_in": float(np.max(lv_in))}
    escape = None
    if report.radius < 1:
        r_out = min(0.999, report.radius * (1 + 1e-2))
        lv_out, _ = circle_levels(report, r_out, plan.angles)
        escape = bool(np.max(lv_out) > 1 + plan.margin_out)
        details.update(r_out=r_out, escape=escape, max_level_out=float(np.max(lv_out)))
    else:
        details["radius_at_one"] = True
    i = int(np.argmax(lv_in))
    passed = inside and escape is not False
    n = plan.angles * (1 if escape is None else 2)
    return VerificationReport(passed, 1 - float(lv_in[i]), complex(z_in[i]), n, details)


# --- independent polygon oracle -----------------------------------------

def winding_number(u, polygon: np.ndarray, chunk: int = 512) -> np.ndarray:
    """Winding number of a closed polygon around each point of ``u``."""
    u = np.atleast_1d(np.asarray(u, dtype=complex))
    nxt = np.roll(polygon, -1)
    out = np.empty(u.size)
    for s in range(0, u.size, chunk):
        uu = u[s:s + chunk, None]
        out[s:s + chunk] = np.sum(np.angle((nxt[None, :] - uu) / (polygon[None, :] - uu)), axis=1)
    return np.rint(out / (2 * np.pi)).astype(int)


def polygon_distance(u, polygon: np.ndarray, chunk: int = 512) -> np.ndarray:
    """Euclidean distance from each ``u`` to the closed polygon's edges."""
    u = np.atleast_1d(np.asarray(u, dtype=complex))
    a, b = polygon, np.roll(polygon, -1)
    d = b - a
    dd = np.abs(d) ** 2
    out = np.empty(u.size)
    for s in range(0, u.size, chunk):
        uu = u[s:s + chunk, None]
        tt = np.clip(((uu - a) * np.conj(d)).real / dd, 0.0, 1.0)
        out[s:s + chunk] = np.min(np.abs(uu - (a + tt * d)), axis=1)
    return out


def boundary_polygon(sigma: float = 1.0, vertices: int = 4096) -> np.ndarray:
    _t, x, y = region.boundary_samples(sigma, vertices)
    return x + 1j * y
