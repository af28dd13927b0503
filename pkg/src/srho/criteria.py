"""Coefficient and convolution criteria for membership in S*(cosh sqrt z).

Throughout, ``C(t) = cosh(e^{it/2})`` runs over the boundary of the region
for ``t`` in [-pi, pi]. ``f`` belongs to the class exactly when
``zf'/f`` never equals ``C(t)``, i.e. when

    1 - sum_n (n - C) a_n / (C - 1) z^(n-1)

has no zero in the unit disc for any ``t``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .region import C1
from .verify import VerificationReport


@dataclass(frozen=True)
class CoeffList:
    """Tail ``a_2, ..., a_M`` of ``f(z) = z + sum a_k z^k``."""

    a: tuple

    def __init__(self, a=()):
        arr = np.asarray(a, dtype=complex).ravel()
        if not np.all(np.isfinite(arr)):
            raise ValueError("coefficients must be finite")
        object.__setattr__(self, "a", tuple(complex(x) for x in arr))

    @classmethod
    def from_series(cls, coeffs) -> "CoeffList":
        """From a full coefficient array ``[0, 1, a_2, ...]``."""
        coeffs = np.asarray(coeffs, dtype=complex)
        if abs(coeffs[0]) > 1e-14 or abs(coeffs[1] - 1) > 1e-14:
            raise ValueError("expected f(0) = 0 and f'(0) = 1")
        return cls(coeffs[2:])

    def array(self) -> np.ndarray:
        return np.array(self.a, dtype=complex)

    @property
    def degrees(self) -> np.ndarray:
        return np.arange(2, len(self.a) + 2)


def boundary_values(t_samples: int) -> tuple[np.ndarray, np.ndarray]:
    """``t`` on [-pi, pi] (endpoints included) and ``C(t) = cosh(e^{it/2})``."""
    t = np.linspace(-np.pi, np.pi, t_samples)
    return t, np.cosh(np.exp(0.5j * t))


def _zero_count(poly_low_first: np.ndarray, radius: float = 1.0) -> int:
    """Zeros of a polynomial strictly inside ``|z| < radius``.

    Trailing coefficients below ``1e-14`` of the largest one cannot move a
    zero into the closed disc (radius <= 1) but wreck the companion matrix,
    so they are dropped first.
    """
    p = np.asarray(poly_low_first, dtype=complex)
    big = np.nonzero(np.abs(p) > 1e-14 * np.max(np.abs(p)))[0]
    p = p[: big[-1] + 1]
    if len(p) <= 1:
        return 0
    roots = np.roots(p[::-1])
    return int(np.sum(np.abs(roots) < radius))


def convolution_nonvanishing(
    c: CoeffList, t_samples: int = 720, z_radii: int = 64, z_angles: int = 256,
) -> VerificationReport:
    """Check that the convolution expression has no zero in the unit disc.

    The minimum modulus is sampled on circles of radius 0.1..0.999. Since a
    finite grid can straddle an isolated zero, the zeros of the polynomial
    are also counted for each ``t``; any zero with ``|z| < 1`` fails.
    """
    if min(t_samples, z_radii * z_angles) < 64:
        raise ValueError("need at least 64 samples")
    a = c.array()
    if a.size == 0:
        return VerificationReport(True, 1.0, complex(0.0), t_samples * z_radii * z_angles)
    n = c.degrees
    t, C = boundary_values(t_samples)
    rho = np.linspace(0.1, 0.999, z_radii)
    theta = 2 * np.pi * np.arange(z_angles) / z_angles
    z = (rho[:, None] * np.exp(1j * theta[None, :])).ravel()
    zpow = z[None, :] ** (n[:, None] - 1)

    W = (C[:, None] - n[None, :]) * a[None, :] / (C[:, None] - 1)
    worst, witness, zeros = math.inf, complex(0.0), 0
    for s in range(0, t_samples, 64):
        vals = np.abs(1 + W[s:s + 64] @ zpow)
        k, i = np.unravel_index(int(np.argmin(vals)), vals.shape)
        if vals[k, i] < worst:
            worst, witness = float(vals[k, i]), complex(z[i])
    for w in W:
        zeros += _zero_count(np.concatenate(([1.0 + 0j], w)))
    ok = worst > 1e-9 and zeros == 0
    return VerificationReport(ok, worst, witness, t_samples * z.size, {"zeros_inside": zeros})


def coeff_weights(n: np.ndarray, t_samples: int = 720) -> np.ndarray:
    """``|(n - C(t)) / (C(t) - 1)|`` with rows indexed by ``t``."""
    _t, C = boundary_values(t_samples)
    return np.abs((n[None, :] - C[:, None]) / (C[:, None] - 1))


def coeff_sufficient(c: CoeffList, t_samples: int = 720) -> tuple[bool, float]:
    """Sufficient condition: the weighted coefficient sum stays below 1 for every ``t``."""
    if t_samples < 64:
        raise ValueError("t_samples must be >= 64")
    a = np.abs(c.array())
    if a.size == 0:
        return True, 0.0
    worst = float(np.max(coeff_weights(c.degrees, t_samples) @ a))
    return worst < 1, worst


def coeff_l2_check(c: CoeffList) -> tuple[bool, float, float]:
    """Necessary condition ``sum (k^2 - cosh(1)^2)|a_k|^2 <= cosh(1)^2 - 1``."""
    a = np.abs(c.array())
    k = c.degrees
    lhs = float(np.sum((k**2 - C1**2) * a**2))
    rhs = C1**2 - 1
    return lhs <= rhs, lhs, rhs


def fekete_szego_bound(mu: complex) -> float:
    """Sharp bound on ``|a_3 - mu a_2^2|`` over the class."""
    return 0.25 * max(1.0, abs(mu - 7 / 12))
