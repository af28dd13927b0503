"""Geometry of the image region of ``cosh(sigma*sqrt(z))`` over the unit disc.

The region is ``{u : |arccosh u| < |sigma|}`` with the principal ``arccosh``;
:func:`contains` tests exactly that. The boundary is parametrised by
``t`` in [-pi, pi] as the image of ``e^{it}``, i.e. ``cosh(sigma*e^{it/2})``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import numerics
from .errors import COutOfRange, HplDomain, SigmaOutOfRange
from .numerics import DEFAULT, NumericConfig

C0 = math.cos(1.0)
C1 = math.cosh(1.0)


@dataclass(frozen=True)
class Constants:
    c0: float = C0
    c1: float = C1

    @property
    def midpoint(self) -> float:
        return 0.5 * (self.c0 + self.c1)


CONSTANTS = Constants()


@dataclass(frozen=True)
class Sigma:
    """Region parameter; stored as ``|sigma|`` because the map is even in sigma."""

    value: float = 1.0

    def __post_init__(self):
        v = float(self.value)
        if v == 0 or not math.isfinite(v) or abs(v) > math.pi / 2 + 1e-15:
            raise SigmaOutOfRange(f"sigma must lie in [-pi/2, pi/2] \\ {{0}}, got {v}")
        object.__setattr__(self, "value", min(abs(v), math.pi / 2))

    def __float__(self):
        return self.value

    @property
    def lo(self) -> float:
        """Leftmost real point ``cos sigma``."""
        return math.cos(self.value)

    @property
    def hi(self) -> float:
        """Rightmost real point ``cosh sigma``."""
        return math.cosh(self.value)

    @property
    def midpoint(self) -> float:
        return 0.5 * (self.lo + self.hi)


def as_sigma(sigma: "Sigma | float") -> Sigma:
    return sigma if isinstance(sigma, Sigma) else Sigma(sigma)


@dataclass(frozen=True)
class Disc:
    center: complex
    radius: float

    def __post_init__(self):
        if self.radius < 0:
            raise ValueError("radius must be non-negative")

    def boundary(self, angles: int, scale: float = 1.0) -> np.ndarray:
        theta = 2 * np.pi * np.arange(angles) / angles
        return self.center + scale * self.radius * np.exp(1j * theta)


@dataclass(frozen=True)
class BoundaryPoint:
    t: float
    x: float
    y: float

    @property
    def u(self) -> complex:
        return complex(self.x, self.y)


def eval_rho(sigma: "Sigma | float", z):
    """``cosh(sigma*sqrt(z))``; the even series is used for ``|z| <= 1e-8``."""
    s = as_sigma(sigma).value
    z = np.asarray(z, dtype=complex)
    out = np.cosh(s * np.sqrt(z))
    small = np.abs(z) <= 1e-8
    if np.any(small):
        zs = z[small] if z.ndim else z
        series = 1 + s**2 * zs / 2 + s**4 * zs**2 / 24
        if z.ndim:
            out[small] = series
        else:
            out = series
    return out if out.ndim else complex(out)


def arccosh_principal(u):
    """``log(u + sqrt(u-1)*sqrt(u+1))``; the product form keeps ``Re >= 0``."""
    u = np.asarray(u, dtype=complex)
    return np.log(u + np.sqrt(u - 1) * np.sqrt(u + 1))


def level(sigma: "Sigma | float", u):
    """``|arccosh u| / sigma``: below 1 inside the region, 1 on its boundary."""
    return np.abs(arccosh_principal(u)) / as_sigma(sigma).value


def contains(sigma: "Sigma | float", u, margin_out: float = 0.0):
    """Membership test with the radius widened to ``sigma*(1 + margin_out)``."""
    res = level(sigma, u) < 1.0 + margin_out
    return bool(res) if np.ndim(res) == 0 else res


def boundary_xy(sigma: "Sigma | float", t):
    """Real and imaginary parts of the boundary curve at parameter(s) ``t``."""
    s = as_sigma(sigma).value
    t = np.asarray(t, dtype=float)
    a, b = s * np.sin(t / 2), s * np.cos(t / 2)
    return np.cos(a) * np.cosh(b), np.sin(a) * np.sinh(b)


def boundary_point(sigma: "Sigma | float", t: float) -> BoundaryPoint:
    x, y = boundary_xy(sigma, t)
    return BoundaryPoint(float(t), float(x), float(y))


def boundary_samples(sigma: "Sigma | float", samples: int):
    """``(t, x, y)`` at ``t = -pi + 2*pi*k/samples``, ``k = 0..samples-1``."""
    t = -np.pi + 2 * np.pi * np.arange(samples) / samples
    x, y = boundary_xy(sigma, t)
    return t, x, y


def boundary_csv(sigma: "Sigma | float", samples: int) -> str:
    t, x, y = boundary_samples(sigma, samples)
    rows = ["t,x,y"] + [f"{a:.17g},{b:.17g},{c:.17g}" for a, b, c in zip(t, x, y)]
    return "\n".join(rows) + "\n"


def _check_c(sig: Sigma, c: float):
    if not sig.lo < c < sig.hi:
        raise COutOfRange(f"center {c} outside ({sig.lo}, {sig.hi})")


def _gc(s: float, c: float, tau):
    a, b = s * np.sin(tau), s * np.cos(tau)
    return (c - np.cosh(b) * np.cos(a)) ** 2 + np.sinh(b) ** 2 * np.sin(a) ** 2


def distance_sq(sigma: "Sigma | float", c: float, tau):
    """Squared distance from ``(c, 0)`` to the boundary point at ``t = 2*tau``."""
    sig = as_sigma(sigma)
    _check_c(sig, c)
    out = _gc(sig.value, c, np.asarray(tau, dtype=float))
    return float(out) if np.ndim(out) == 0 else out


def distance_sq_derivative(sigma: "Sigma | float", c: float, tau):
    """Derivative of :func:`distance_sq` with respect to ``tau``."""
    s = as_sigma(sigma).value
    tau = np.asarray(tau, dtype=float)
    a, b = s * np.sin(tau), s * np.cos(tau)
    x = np.cosh(b) * np.cos(a)
    y = np.sinh(b) * np.sin(a)
    dx = -s * np.sin(tau) * np.sinh(b) * np.cos(a) - s * np.cos(tau) * np.cosh(b) * np.sin(a)
    dy = -s * np.sin(tau) * np.cosh(b) * np.sin(a) + s * np.cos(tau) * np.sinh(b) * np.cos(a)
    return -2 * (c - x) * dx + 2 * y * dy


def critical_point_residual(sigma: "Sigma | float", c: float, tau):
    """Residual of the critical-point equation of ``G_c`` written with ``tan(tau)``."""
    s = as_sigma(sigma).value
    a, b = s * np.sin(tau), s * np.cos(tau)
    lhs = 2 * c * np.tan(tau) * np.cos(a) * np.sinh(b) + 2 * c * np.sin(a) * np.cosh(b)
    rhs = np.sin(2 * a) + np.tan(tau) * np.sinh(2 * b)
    return lhs - rhs


def gc_interior_critical_points(
    sigma: "Sigma | float", c: float, cfg: NumericConfig = DEFAULT
) -> list[float]:
    """Interior critical points of ``G_c`` on (0, pi/2), found by sign scan."""
    sig = as_sigma(sigma)
    _check_c(sig, c)
    eps = 1e-9
    g = lambda t: float(distance_sq_derivative(sig, c, t))
    xs = np.linspace(eps, np.pi / 2 - eps, cfg.grid_n)
    vals = distance_sq_derivative(sig, c, xs)
    roots = []
    for i in np.nonzero(np.sign(vals[:-1]) * np.sign(vals[1:]) < 0)[0]:
        roots.append(numerics.find_root(g, (xs[i], xs[i + 1]), cfg))
    return roots


def grid_inscribed_radius(
    sigma: "Sigma | float", c: float, cfg: NumericConfig = DEFAULT
) -> float:
    """Distance from ``(c, 0)`` to the boundary by scanning ``G_c`` (no closed form)."""
    sig = as_sigma(sigma)
    if not sig.lo < c < sig.hi:
        return 0.0
    _tau, g = numerics.minimize_on_interval(
        lambda t: _gc(sig.value, c, t), 0.0, np.pi / 2, cfg, vectorized=True
    )
    return math.sqrt(max(g, 0.0))


def inscribed_radius(
    sigma: "Sigma | float", c: float, cfg: NumericConfig = DEFAULT, cross_check: bool = True
) -> Disc:
    """Largest disc centred at real ``c`` inside the region.

    Closed form ``c - cos(sigma)`` left of the midpoint of the real extent and
    ``cosh(sigma) - c`` right of it; optionally confirmed against a scan of
    the squared boundary distance.
    """
    sig = as_sigma(sigma)
    _check_c(sig, c)
    r = c - sig.lo if c <= sig.midpoint else sig.hi - c
    if cross_check:
        rg = grid_inscribed_radius(sig, c, cfg)
        if abs(rg - r) > 1e-8:
            raise ArithmeticError(f"closed-form radius {r} disagrees with boundary scan {rg}")
    return Disc(complex(c, 0.0), r)


def disc_inside(
    sigma: "Sigma | float", center: float, radius: float, exact: bool = True,
    cfg: NumericConfig = DEFAULT,
) -> bool:
    """Whether the disc ``|u - center| <= radius`` fits, using the inscribed radius.

    ``exact`` uses the closed form; otherwise the boundary-distance scan.
    """
    sig = as_sigma(sigma)
    if not sig.lo < center < sig.hi:
        return False
    if exact:
        r = center - sig.lo if center <= sig.midpoint else sig.hi - center
    else:
        r = grid_inscribed_radius(sig, center, cfg)
    return radius <= r


def _arg_on_boundary(s: float, t):
    a, b = s * np.sin(t / 2), s * np.cos(t / 2)
    return np.arctan2(np.sin(a) * np.sinh(b), np.cos(a) * np.cosh(b))


def max_argument(sigma: "Sigma | float" = 1.0, cfg: NumericConfig = DEFAULT) -> tuple[float, float]:
    """Largest ``|arg u|`` over the boundary, returned as ``(m, t_star)`` with t in [0, pi]."""
    s = as_sigma(sigma).value
    t, m = numerics.maximize_on_interval(
        lambda t: _arg_on_boundary(s, t), 0.0, math.pi, cfg, vectorized=True
    )
    return m, t


def imag_extent(sigma: "Sigma | float" = 1.0, cfg: NumericConfig = DEFAULT) -> tuple[float, float]:
    """``(l, t0)``: ``|Im|`` of the boundary where its real part hits the midpoint.

    ``t0`` is the least root in (0, pi) of
    ``cos s + cosh s - 2 cos(s sin(t/2)) cosh(s cos(t/2))``.
    """
    sig = as_sigma(sigma)
    s = sig.value
    f = lambda t: sig.lo + sig.hi - 2 * math.cos(s * math.sin(t / 2)) * math.cosh(s * math.cos(t / 2))
    t0 = numerics.least_root(f, 0.0, math.pi, cfg)
    _x, y = boundary_xy(sig, t0)
    return abs(float(y)), t0


def max_imag(sigma: "Sigma | float" = 1.0, cfg: NumericConfig = DEFAULT) -> tuple[float, float]:
    """Largest ``Im u`` on the boundary and the parameter where it occurs."""
    sig = as_sigma(sigma)
    t, y = numerics.maximize_on_interval(
        lambda t: boundary_xy(sig, t)[1], 0.0, math.pi, cfg, vectorized=True
    )
    return y, t


def _h(tau):
    a, b = np.sin(tau), np.cos(tau)
    return np.sin(a) ** 2 * np.sinh(b) ** 2 / (4 * np.cos(a) * np.cosh(b))


def st_p_gamma(cfg: NumericConfig = DEFAULT) -> tuple[float, float]:
    """``(gamma0, tau)`` maximising ``Im(u)^2 / (4 Re u)`` along the boundary (sigma = 1)."""
    tau, g = numerics.maximize_on_interval(_h, 0.0, math.pi / 2, cfg, vectorized=True)
    return g, tau


@dataclass(frozen=True)
class ThresholdRecord:
    sigma: float
    zeta: float
    beta: float
    kappa_max: float
    k_min: float
    s_hpl_min: float | None
    s_L_min: float


def hpl_threshold(sigma: "Sigma | float") -> float:
    """Smallest ``s`` with ``2**(-s) <= cos(sigma)``; defined for ``|sigma| <= pi/3``."""
    sig = as_sigma(sigma)
    if sig.value > math.pi / 3 + 1e-15:
        raise HplDomain(f"hpl threshold needs |sigma| <= pi/3, got {sig.value}")
    return math.log(1 / sig.lo) / math.log(2)


def inclusion_thresholds(sigma: "Sigma | float" = 1.0) -> ThresholdRecord:
    sig = as_sigma(sigma)
    try:
        s_hpl = hpl_threshold(sig)
    except HplDomain:
        s_hpl = None
    return ThresholdRecord(
        sigma=sig.value,
        zeta=sig.lo,
        beta=sig.hi,
        kappa_max=1 - sig.lo**2,
        k_min=sig.hi / (sig.hi - 1),
        s_hpl_min=s_hpl,
        s_L_min=1 - math.sqrt(sig.lo),
    )
