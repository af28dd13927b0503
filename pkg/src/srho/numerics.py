"""Scalar root finding, one-dimensional extremization and quadrature.

Everything here is deterministic: grids are fixed by :class:`NumericConfig`
and ties resolve to the leftmost grid point.
"""
from __future__ import annotations

import math
import os
import warnings
from dataclasses import dataclass, replace
from typing import Callable, Sequence

import numpy as np
from scipy import integrate as _integrate
from scipy import optimize as _optimize

from .errors import InvalidInterval, NoConvergence, NoSignChange

RealFn = Callable[[float], float]

_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class NumericConfig:
    abs_tol: float = 1e-12
    rel_tol: float = 1e-10
    max_iter: int = 200
    grid_n: int = 2048

    def __post_init__(self):
        if not self.abs_tol > 0 or not self.rel_tol > 0:
            raise ValueError("tolerances must be positive")
        if self.max_iter < 1:
            raise ValueError("max_iter must be >= 1")
        if self.grid_n < 16:
            raise ValueError("grid_n must be >= 16")

    @classmethod
    def from_env(cls, **overrides) -> "NumericConfig":
        """Default config, with ``SRHO_GRID_N`` honoured when set."""
        cfg = cls()
        env = os.environ.get("SRHO_GRID_N")
        if env:
            cfg = replace(cfg, grid_n=int(env))
        return replace(cfg, **overrides) if overrides else cfg


DEFAULT = NumericConfig()


@dataclass(frozen=True)
class Bracket:
    lo: float
    hi: float

    def __post_init__(self):
        if not self.lo < self.hi:
            raise InvalidInterval(f"bracket needs lo < hi, got [{self.lo}, {self.hi}]")

    @property
    def width(self) -> float:
        return self.hi - self.lo


def find_root(f: RealFn, b: Bracket | Sequence[float], cfg: NumericConfig = DEFAULT) -> float:
    """Root of ``f`` inside a sign-changing bracket (Brent's method)."""
    if not isinstance(b, Bracket):
        b = Bracket(*b)
    flo, fhi = f(b.lo), f(b.hi)
    if flo == 0.0:
        return b.lo
    if fhi == 0.0:
        return b.hi
    if flo * fhi > 0:
        raise NoSignChange(f"f({b.lo})={flo:.3g} and f({b.hi})={fhi:.3g} have the same sign")
    try:
        x = _optimize.brentq(
            f, b.lo, b.hi,
            xtol=cfg.abs_tol * 1e-3,
            rtol=4 * np.finfo(float).eps,
            maxiter=cfg.max_iter,
        )
    except RuntimeError as exc:  # brentq signals iteration exhaustion this way
        raise NoConvergence(str(exc)) from exc
    return float(x)


def scan_bracket(f: RealFn, lo: float, hi: float, cfg: NumericConfig = DEFAULT) -> Bracket:
    """Leftmost sign change of ``f`` over ``grid_n`` equispaced points of [lo, hi]."""
    if not lo < hi:
        raise InvalidInterval(f"need lo < hi, got [{lo}, {hi}]")
    xs = np.linspace(lo, hi, cfg.grid_n)
    prev_x, prev_v = xs[0], f(xs[0])
    if prev_v == 0.0:
        return Bracket(prev_x, xs[1])
    for x in xs[1:]:
        v = f(x)
        if v == 0.0 or prev_v * v < 0:
            return Bracket(float(prev_x), float(x))
        prev_x, prev_v = x, v
    raise NoSignChange(f"no sign change on [{lo}, {hi}] with {cfg.grid_n} samples")


def least_root(f: RealFn, lo: float, hi: float, cfg: NumericConfig = DEFAULT) -> float:
    """Least root in [lo, hi]: leftmost scanned sign change, then polished."""
    return find_root(f, scan_bracket(f, lo, hi, cfg), cfg)


def _golden_max(f: RealFn, a: float, b: float, cfg: NumericConfig) -> tuple[float, float]:
    x1 = b - _INV_PHI * (b - a)
    x2 = a + _INV_PHI * (b - a)
    f1, f2 = f(x1), f(x2)
    for _ in range(cfg.max_iter):
        if b - a <= cfg.abs_tol:
            break
        if f1 >= f2:
            b, x2, f2 = x2, x1, f1
            x1 = b - _INV_PHI * (b - a)
            f1 = f(x1)
        else:
            a, x1, f1 = x1, x2, f2
            x2 = a + _INV_PHI * (b - a)
            f2 = f(x2)
    return (x1, f1) if f1 >= f2 else (x2, f2)


def maximize_on_interval(
    f: RealFn, lo: float, hi: float, cfg: NumericConfig = DEFAULT, vectorized: bool = False
) -> tuple[float, float]:
    """Return ``(argmax, max)`` of ``f`` on [lo, hi].

    A coarse scan of ``grid_n`` points picks the best cell (leftmost on ties);
    golden-section search then refines inside the two neighbouring cells.
    The refined point is only accepted if it strictly improves on the grid.
    With ``vectorized`` the scan calls ``f`` once on the whole grid array.
    """
    if not lo < hi:
        raise InvalidInterval(f"need lo < hi, got [{lo}, {hi}]")
    xs = np.linspace(lo, hi, cfg.grid_n)
    if vectorized:
        vals = np.asarray(f(xs), dtype=float)
    else:
        vals = np.array([f(x) for x in xs], dtype=float)
    i = int(np.argmax(vals))
    best_x, best_v = float(xs[i]), float(vals[i])
    a = float(xs[max(i - 1, 0)])
    b = float(xs[min(i + 1, len(xs) - 1)])
    x, v = _golden_max(lambda t: float(f(t)), a, b, cfg)
    if v > best_v:
        return float(x), float(v)
    return best_x, best_v


def minimize_on_interval(
    f: RealFn, lo: float, hi: float, cfg: NumericConfig = DEFAULT, vectorized: bool = False
) -> tuple[float, float]:
    x, v = maximize_on_interval(lambda s: -f(s), lo, hi, cfg, vectorized)
    return x, -v


def integrate(f: RealFn, a: float, b: float, cfg: NumericConfig = DEFAULT) -> float:
    """Adaptive Gauss-Kronrod quadrature of ``f`` over [a, b]."""
    if a == b:
        return 0.0
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", _integrate.IntegrationWarning)
        val, _err = _integrate.quad(f, a, b, epsabs=cfg.abs_tol, epsrel=cfg.rel_tol, limit=cfg.max_iter)
    # roundoff warnings are tolerated; subdivision exhaustion and bad integrands are not
    for w in caught:
        msg = str(w.message)
        if "subdivisions" in msg or "bad integrand" in msg or "divergent" in msg:
            raise NoConvergence(f"quadrature on [{a}, {b}]: {msg.splitlines()[0]}")
    return float(val)


def with_series_limit(
    f: RealFn, coeffs: Sequence[float], cutoff: float = 1e-4
) -> RealFn:
    """Wrap ``f`` so that ``|t| < cutoff`` evaluates the polynomial ``coeffs`` instead.

    Used for integrands like ``(rho(t) - 1)/t`` whose value at 0 is a removable
    singularity; ``coeffs[k]`` multiplies ``t**k``.
    """
    poly = np.polynomial.Polynomial(coeffs)

    def g(t: float) -> float:
        if abs(t) < cutoff:
            return float(poly(t))
        return f(t)

    return g


def last_true(
    pred: Callable[[float], bool],
    lo: float,
    hi: float,
    cfg: NumericConfig = DEFAULT,
    xtol: float = 1e-12,
) -> float:
    """Largest x in [lo, hi] with ``pred`` true, for predicates true then false.

    Scans ``grid_n`` points for the first failure, then bisects between it and
    the last success. Returns ``hi`` when the predicate never fails.
    """
    xs = np.linspace(lo, hi, cfg.grid_n)
    if not pred(xs[0]):
        raise NoSignChange(f"predicate already false at {lo}")
    good = xs[0]
    for x in xs[1:]:
        if not pred(x):
            bad = x
            break
        good = x
    else:
        return float(hi)
    for _ in range(cfg.max_iter):
        if bad - good <= xtol:
            break
        mid = 0.5 * (good + bad)
        if pred(mid):
            good = mid
        else:
            bad = mid
    return float(good)
