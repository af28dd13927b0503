"""Radius constants and parameter thresholds for the class S*(cosh sqrt z).

Most radii come from requiring a bounding disc ``|p - c| <= R`` of some class
to fit inside the region, where the largest admissible disc about a real
centre ``c`` has radius ``min(c - cos 1, cosh 1 - c)``. Each ``*_disc``
function returns that bounding disc at ``|z| = r`` so the closed forms can be
checked against a direct bisection on disc containment.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Callable

from . import numerics, region
from .errors import (
    AOutOfRange, BadN, BetaOutOfRange, ParamOrder, UnsupportedSigns, ZetaOutOfRange,
)
from .numerics import DEFAULT, NumericConfig
from .series import FamilySpec

C0, C1 = region.C0, region.C1
MID = 0.5 * (C0 + C1)


@dataclass(frozen=True)
class JanowskiParams:
    A: float
    B: float
    n: int = 1

    def __post_init__(self):
        if self.n < 1:
            raise BadN(f"n must be >= 1, got {self.n}")
        if not -1 <= self.B:
            raise ParamOrder(f"B must be >= -1, got {self.B}")
        if not self.B < self.A:
            raise ParamOrder(f"need B < A, got A={self.A}, B={self.B}")
        if self.A > 1:
            raise ParamOrder(f"A must be <= 1, got {self.A}")


@dataclass(frozen=True)
class RadiusReport:
    """A radius with the case that produced it and the function that attains it.

    ``target`` names the region the radius refers to: ``"omega"`` (the cosh
    region), ``"re_gt"`` (``Re w > zeta``), ``"re_lt"`` (``Re w < beta``) or
    ``"convex"`` (convexity of order alpha).
    """

    radius: float
    case_label: str
    residual: float = 0.0
    extremal: FamilySpec | None = None
    klass: str = ""
    params: dict = field(default_factory=dict)
    target: str = "omega"
    extras: dict = field(default_factory=dict)

    def __post_init__(self):
        if not 0 <= self.radius <= 1:
            raise ValueError(f"radius {self.radius} outside [0, 1]")

    def to_dict(self) -> dict:
        return {
            "class": self.klass,
            "params": dict(self.params),
            "radius": self.radius,
            "case": self.case_label,
            "residual": self.residual,
            "extremal": self.extremal.label if self.extremal else None,
            "extras": dict(self.extras),
        }

    def to_json(self) -> str:
        return json.dumps(_finite(self.to_dict()), sort_keys=True)


def _finite(obj):
    if isinstance(obj, float) and not math.isfinite(obj):
        return None
    if isinstance(obj, dict):
        return {k: _finite(v) for k, v in obj.items()}
    return obj


def _phi():
    return FamilySpec("PhiN", n=2)


# --- radii for f in S*(cosh sqrt z) ---------------------------------------

def starlike_order_radius(zeta: float) -> RadiusReport:
    """Radius of starlikeness of order ``zeta``: ``cos(sqrt r) = zeta``, so ``r = arccos(zeta)**2``."""
    if not C0 <= zeta < 1:
        raise ZetaOutOfRange(f"zeta must lie in [cos 1, 1), got {zeta}")
    r = min(1.0, math.acos(zeta) ** 2)
    res = abs(math.cos(math.sqrt(r)) - zeta)
    return RadiusReport(r, "arccos", res, _phi(), "starlike-order", {"zeta": zeta}, "re_gt")


def mbeta_radius(beta: float) -> RadiusReport:
    """Radius for ``Re(zf'/f) < beta``: ``cosh(sqrt r) = beta``, or 1 once ``beta >= cosh 1``."""
    if not beta > 1:
        raise BetaOutOfRange(f"beta must exceed 1, got {beta}")
    if beta >= C1:
        return RadiusReport(1.0, "beta>=c1", 0.0, _phi(), "m-beta", {"beta": beta}, "re_lt")
    r = math.acosh(beta) ** 2
    res = abs(math.cosh(math.sqrt(r)) - beta)
    return RadiusReport(r, "arccosh", res, _phi(), "m-beta", {"beta": beta}, "re_lt")


def convexity_equation(r: float, alpha: float, form: str = "printed") -> float:
    """Defining function of the convexity radius; its least root in (0, 1) is the radius.

    ``printed`` is ``2(1-r^2)cos(sqrt r) - sqrt(r) tan(sqrt r) - alpha``.
    ``derived`` is the lower bound the argument actually yields,
    ``cos(sqrt r) - sqrt(r) tan(sqrt r)/(2(1-r^2)) - alpha``. Both agree at alpha = 0.
    """
    s = math.sqrt(r)
    if form == "printed":
        return 2 * (1 - r * r) * math.cos(s) - s * math.tan(s) - alpha
    if form == "derived":
        return math.cos(s) - s * math.tan(s) / (2 * (1 - r * r)) - alpha
    raise ValueError(f"unknown form {form!r}")


def convexity_radius(alpha: float, form: str = "printed", cfg: NumericConfig = DEFAULT) -> RadiusReport:
    if not 0 <= alpha < 1:
        raise ValueError(f"alpha must lie in [0, 1), got {alpha}")
    f = lambda r: convexity_equation(r, alpha, form)
    # the derived form has a pole at r = 1, so stop just short of it
    hi = 1.0 if form == "printed" else 1.0 - 1e-9
    r = numerics.least_root(f, 0.0, hi, cfg)
    return RadiusReport(
        r, f"least-root:{form}", abs(f(r)), None, "convexity", {"alpha": alpha}, "convex",
    )


# --- Janowski ------------------------------------------------------------

def janowski_subordinate_ok(A: float, B: float) -> bool:
    """Whether ``(1+Az)/(1+Bz)`` is subordinate to ``cosh(sqrt z)``."""
    if not B < A:
        raise ParamOrder(f"need B < A, got A={A}, B={B}")
    if 2 * (1 - A * B) <= (C0 + C1) * (1 - B * B):
        return A <= 1 - (1 - B) * C0
    return A <= (1 + B) * C1 - 1


def janowski_disc(A: float, B: float, n: int, r: float) -> tuple[float, float]:
    rho = r**n
    d = 1 - B * B * rho * rho
    if d <= 0:
        return math.inf, math.inf
    return (1 - A * B * rho * rho) / d, (A - B) * rho / d


def janowski_radius(p: JanowskiParams) -> RadiusReport:
    A, B, n = p.A, p.B, p.n
    params = {"A": A, "B": B, "n": n}
    ext = FamilySpec("JanowskiExtremal", n=n, A=A, B=B)
    r0 = min(1.0, ((1 - C0) / (A - B * C0)) ** (1 / n))
    if B >= 0:
        return RadiusReport(r0, "R0", 0.0, ext, "janowski", params, extras={"R0": r0})
    if A <= 0:
        raise UnsupportedSigns("B < 0 with A <= 0 is not covered")
    # centre crosses the midpoint of the real extent at R1
    r1 = ((C0 + C1 - 2) / (B * ((C0 + C1) * B - 2 * A))) ** (1 / (2 * n))
    base = (C0 - 2) / (B * (C0 * B - 2 * A))
    r1_printed = base ** (1 / (2 * n)) if base >= 0 else math.nan
    r2 = min(1.0, ((C1 - 1) / (A - B * C1)) ** (1 / n))
    extras = {"R0": r0, "R1": r1, "R2": r2, "R1_printed": r1_printed}
    if r0 <= r1:
        return RadiusReport(r0, "R0", 0.0, ext, "janowski", params, extras=extras)
    return RadiusReport(r2, "R2", 0.0, ext, "janowski", params, extras=extras)


# --- M_n(beta) -----------------------------------------------------------

def mn_beta_disc(beta: float, n: int, r: float) -> tuple[float, float]:
    rho = r**n
    d = 1 - rho * rho
    if d <= 0:
        return math.inf, math.inf
    return (1 + (1 - 2 * beta) * rho * rho) / d, 2 * (beta - 1) * rho / d


def mn_beta_radius(beta: float, n: int = 1) -> RadiusReport:
    if not beta > 1:
        raise BetaOutOfRange(f"beta must exceed 1, got {beta}")
    if n < 1:
        raise BadN(f"n must be >= 1, got {n}")
    r = ((1 - C0) / (2 * beta - (1 + C0))) ** (1 / n)
    return RadiusReport(
        r, "closed-form", 0.0, FamilySpec("MBetaExtremal", n=n, beta=beta),
        "mn-beta", {"beta": beta, "n": n},
    )


# --- ratio classes -------------------------------------------------------

RATIO_CLASSES = ("F1_0", "F1_HALF", "F2")


def ratio_class_disc(klass: str, n: int, r: float) -> tuple[float, float]:
    rho = r**n
    if rho >= 1:
        return math.inf, math.inf
    if klass == "F1_0":
        return 1.0, n * rho * (3 + rho) / (1 - rho * rho)
    if klass == "F1_HALF":
        return 1.0, 2 * n * rho / (1 - rho)
    if klass == "F2":
        d = 1 - rho * rho
        return 1 / d, (n * rho * rho + (1 + n) * rho) / d
    raise ValueError(f"unknown class {klass!r}")


_RATIO_WITNESS = {"F1_0": "F1ZeroWitness", "F1_HALF": "F1HalfWitness", "F2": "F2Witness"}


def ratio_class_radius(klass: str, n: int = 1) -> RadiusReport:
    if n < 1:
        raise BadN(f"n must be >= 1, got {n}")
    if klass == "F1_0":
        k = 1 + n - C0
        v = (math.sqrt(9 * n * n - 4 * (C0 - 1) * k) - 3 * n) / (2 * k)
    elif klass == "F1_HALF":
        v = (1 - C0) / (2 * n - (C0 - 1))
    elif klass == "F2":
        v = (math.sqrt(1 + n * (n + 6) + 4 * C0 * (C0 - (1 + n))) - (1 + n)) / (2 * (n - C0))
    else:
        raise ValueError(f"unknown class {klass!r}; expected one of {RATIO_CLASSES}")
    r = v ** (1 / n)
    return RadiusReport(
        r, "closed-form", 0.0, FamilySpec(_RATIO_WITNESS[klass], n=n), klass, {"n": n},
        extras={"disc_certified": disc_radius(lambda x: ratio_class_disc(klass, n, x))},
    )


# --- F3 ------------------------------------------------------------------

def f3_disc(A: float, n: int, r: float) -> tuple[float, float]:
    rho = r**n
    d = 1 - rho * rho
    if d <= 0:
        return math.inf, math.inf
    return (1 + A * rho * rho) / d, (4 * n + 1 + A) * rho / d


def f3_radius(A: float, n: int = 1) -> RadiusReport:
    """Closed forms R0 (left edge binds) and R1 (right edge binds) plus a certified radius.

    The reported ``radius`` is the largest r whose bounding disc still fits,
    found by bisection on the exact inscribed radius.
    """
    if not -1 <= A <= 1:
        raise AOutOfRange(f"A must lie in [-1, 1], got {A}")
    if n < 1:
        raise BadN(f"n must be >= 1, got {n}")
    b = 1 + A + 4 * n
    if A == -C0:
        r0 = ((1 - C0) / (1 + 4 * n - C0)) ** (1 / n)
    else:
        # the minus sign gives the positive root on both sides of A = -cos 1
        r0 = ((b - math.sqrt(b * b - 4 * (1 - C0) * (A + C0))) / (2 * (A + C0))) ** (1 / n)
    r1 = ((math.sqrt(b * b + 4 * (A + C1) * (C1 - 1)) - b) / (2 * (A + C1))) ** (1 / n)
    r_mid = ((C0 + C1 - 2) / (C0 + C1 + 2 * A)) ** (1 / (2 * n))
    cert = disc_radius(lambda x: f3_disc(A, n, x), exact=True, xtol=1e-10)
    label = "R0" if abs(cert - r0) <= abs(cert - r1) else "R1"
    return RadiusReport(
        cert, label, 0.0, FamilySpec("F3Witness", n=n, A=A), "F3", {"A": A, "n": n},
        extras={"R0": r0, "R1": r1, "R_mid": r_mid},
    )


# --- shared disc-containment bisection ------------------------------------

def disc_radius(
    disc: Callable[[float], tuple[float, float]],
    exact: bool = False,
    xtol: float = 1e-12,
    cfg: NumericConfig | None = None,
) -> float:
    """Largest r in [0, 1] whose bounding disc ``disc(r)`` fits inside the region (sigma = 1).

    ``exact`` uses the closed-form inscribed radius; otherwise each test
    scans the boundary distance directly.
    """
    cfg = cfg or NumericConfig(grid_n=256)
    scan_cfg = NumericConfig(grid_n=4097)

    def fits(r: float) -> bool:
        c, R = disc(r)
        if not math.isfinite(c) or not math.isfinite(R):
            return False
        return region.disc_inside(1.0, c, R, exact=exact, cfg=scan_cfg)

    return numerics.last_true(fits, 0.0, 1.0, cfg, xtol=xtol)


# --- Example thresholds ----------------------------------------------------

THRESHOLD_FAMILIES = ("MonomialPerturb", "KoebeType", "HalfKoebe", "ExpLine")


def family_threshold(family: str, n: int = 2) -> float:
    """Largest admissible parameter for the four example families."""
    if family == "MonomialPerturb":
        if n < 2:
            raise BadN(f"MonomialPerturb needs n >= 2, got {n}")
        return (1 - C0) / (n - C0)
    if family == "KoebeType":
        return (C1 - 1) / (C1 + 1)
    if family == "HalfKoebe":
        return (C1 - 1) / C1
    if family == "ExpLine":
        return 1 - C0
    raise ValueError(f"unknown family {family!r}; expected one of {THRESHOLD_FAMILIES}")


def threshold_family(family: str, value: float, n: int = 2) -> FamilySpec:
    """The example family with its parameter set to ``value``."""
    if family == "MonomialPerturb":
        return FamilySpec(family, n=n, a=value)
    return FamilySpec(family, A=value)
