"""Truncated Taylor series and the named member functions of the class.

A :class:`TaylorSeries` holds ``c_0 .. c_N`` (``c_k`` multiplies ``z**k``).
Products, quotients and exponentials are computed coefficient-by-coefficient
and silently drop everything above order ``N``.

Besides series, every :class:`FamilySpec` has closed forms for ``f(z)/z`` and
for the logarithmic derivative ``z f'(z)/f(z)``; the verification harness uses
those, since it samples all the way out to ``|z| = 0.999``.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np
from scipy import special

from . import numerics
from .errors import (
    BadOrder,
    NonzeroConstantTerm,
    OutsideAccuracyDomain,
    ParamOutOfDomain,
    ROutOfRange,
    SigmaOutOfRange,
)

DEFAULT_ORDER = 32
ACCURACY_RADIUS = 0.95


@dataclass(frozen=True, eq=False)
class TaylorSeries:
    coeffs: np.ndarray = field(repr=False)

    def __post_init__(self):
        c = np.array(self.coeffs, dtype=complex)
        if c.ndim != 1 or c.size == 0:
            raise ValueError("coeffs must be a non-empty 1-d sequence")
        if not np.all(np.isfinite(c)):
            raise ValueError("coefficients must be finite")
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def zeros(cls, order: int = DEFAULT_ORDER) -> "TaylorSeries":
        return cls(np.zeros(order + 1))

    @classmethod
    def monomial(cls, k: int, order: int = DEFAULT_ORDER, scale: complex = 1.0) -> "TaylorSeries":
        c = np.zeros(order + 1, dtype=complex)
        if k <= order:
            c[k] = scale
        return cls(c)

    @property
    def order(self) -> int:
        return self.coeffs.size - 1

    def __len__(self):
        return self.coeffs.size

    def __getitem__(self, k):
        return self.coeffs[k]

    def __eq__(self, other):
        if not isinstance(other, TaylorSeries):
            return NotImplemented
        return self.coeffs.shape == other.coeffs.shape and bool(np.all(self.coeffs == other.coeffs))

    __hash__ = None

    def __repr__(self):
        head = ", ".join(f"{c:.6g}" for c in self.coeffs[:5])
        return f"TaylorSeries(order={self.order}, [{head}{', ...' if self.order > 4 else ''}])"

    def _coerce(self, other) -> np.ndarray:
        if isinstance(other, TaylorSeries):
            n = min(self.order, other.order)
            return other.coeffs[: n + 1]
        c = np.zeros(self.order + 1, dtype=complex)
        c[0] = other
        return c

    def __add__(self, other):
        b = self._coerce(other)
        return TaylorSeries(self.coeffs[: b.size] + b)

    __radd__ = __add__

    def __neg__(self):
        return TaylorSeries(-self.coeffs)

    def __sub__(self, other):
        return self + (-other if isinstance(other, TaylorSeries) else -other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, TaylorSeries):
            return TaylorSeries(self.coeffs * other)
        n = min(self.order, other.order)
        return TaylorSeries(np.convolve(self.coeffs[: n + 1], other.coeffs[: n + 1])[: n + 1])

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, TaylorSeries):
            return TaylorSeries(self.coeffs / other)
        n = min(self.order, other.order)
        a, b = self.coeffs[: n + 1], other.coeffs[: n + 1]
        if b[0] == 0:
            raise ZeroDivisionError("divisor series has zero constant term")
        q = np.zeros(n + 1, dtype=complex)
        for k in range(n + 1):
            q[k] = (a[k] - np.dot(q[:k], b[k:0:-1])) / b[0]
        return TaylorSeries(q)

    def derivative(self) -> "TaylorSeries":
        """Term-wise derivative; the order drops by one (minimum 0)."""
        if self.order == 0:
            return TaylorSeries([0.0])
        k = np.arange(1, self.order + 1)
        return TaylorSeries(self.coeffs[1:] * k)

    def integral(self) -> "TaylorSeries":
        """Antiderivative vanishing at 0, truncated back to the same order."""
        c = np.zeros(self.order + 1, dtype=complex)
        k = np.arange(1, self.order + 1)
        c[1:] = self.coeffs[:-1] / k
        return TaylorSeries(c)

    def compose_power(self, m: int) -> "TaylorSeries":
        """Series of ``s(z**m)`` at the same order."""
        c = np.zeros(self.order + 1, dtype=complex)
        c[:: m] = self.coeffs[: self.order // m + 1]
        return TaylorSeries(c)

    def shift(self, k: int = 1) -> "TaylorSeries":
        """Multiply by ``z**k`` keeping the order."""
        c = np.zeros(self.order + 1, dtype=complex)
        c[k:] = self.coeffs[: self.order + 1 - k]
        return TaylorSeries(c)

    def truncate(self, order: int) -> "TaylorSeries":
        return TaylorSeries(self.coeffs[: order + 1])

    def horner(self, z):
        """Evaluate the truncated polynomial anywhere (no accuracy guard)."""
        z = np.asarray(z, dtype=complex)
        acc = np.zeros_like(z)
        for c in self.coeffs[::-1]:
            acc = acc * z + c
        return acc if acc.ndim else complex(acc)

    def to_json(self) -> str:
        return json.dumps([[float(c.real), float(c.imag)] for c in self.coeffs])

    @classmethod
    def from_json(cls, text: str) -> "TaylorSeries":
        pairs = json.loads(text)
        return cls([complex(re, im) for re, im in pairs])


def series_exp(s: TaylorSeries) -> TaylorSeries:
    """``exp(s)`` via ``g' = s' g``, i.e. ``k g_k = sum_j j s_j g_{k-j}``."""
    if s.coeffs[0] != 0:
        raise NonzeroConstantTerm(f"exp needs c0 = 0, got {s.coeffs[0]}")
    n = s.order
    js = np.arange(n + 1) * s.coeffs
    g = np.zeros(n + 1, dtype=complex)
    g[0] = 1.0
    for k in range(1, n + 1):
        g[k] = np.dot(js[1: k + 1], g[k - 1:: -1][:k]) / k
    return TaylorSeries(g)


def _check_sigma(sigma: float) -> float:
    sigma = float(sigma)
    if sigma == 0 or abs(sigma) > math.pi / 2 + 1e-15:
        raise SigmaOutOfRange(f"sigma must lie in [-pi/2, pi/2] \\ {{0}}, got {sigma}")
    return sigma


def build_rho_series(sigma: float = 1.0, N: int = DEFAULT_ORDER) -> TaylorSeries:
    """Coefficients ``sigma**(2k)/(2k)!`` of ``cosh(sigma*sqrt(z))``."""
    sigma = _check_sigma(sigma)
    c = np.ones(N + 1)
    for j in range(1, N + 1):
        c[j] = c[j - 1] * sigma**2 / ((2 * j - 1) * (2 * j))
    return TaylorSeries(c)


def phi_exponent(n: int, N: int = DEFAULT_ORDER) -> TaylorSeries:
    """``S(z) = int_0^z (rho(t**(n-1)) - 1)/t dt`` with rho = cosh(sqrt(.))."""
    m = n - 1
    c = np.zeros(N + 1)
    k = 1
    while k * m <= N:
        c[k * m] = 1 / (k * m * math.factorial(2 * k))  # int division avoids float overflow
        k += 1
    return TaylorSeries(c)


def build_phi_n(n: int = 2, N: int = DEFAULT_ORDER) -> TaylorSeries:
    """Extremal function ``z*exp(S(z))`` of the integral representation."""
    if n < 2:
        raise ParamOutOfDomain(f"n must be >= 2, got {n}")
    if N < n:
        raise BadOrder(f"order {N} cannot hold the z^{n} term")
    return series_exp(phi_exponent(n, N)).shift(1)


def si_series(scale: float = 1.0, N: int = DEFAULT_ORDER) -> TaylorSeries:
    """``Si(scale*z)`` by integrating ``sin(t)/t`` term by term."""
    c = np.zeros(N + 1)
    k = 0
    while 2 * k + 1 <= N:
        p = 2 * k + 1
        c[p] = (-1) ** k * scale**p / (p * math.factorial(p))
        k += 1
    return TaylorSeries(c)


def _binomial_series(p: complex, s: complex, n: int, N: int) -> TaylorSeries:
    """``(1 + s*z**n)**p`` truncated at order N (principal branch)."""
    c = np.zeros(N + 1, dtype=complex)
    coef = 1.0 + 0j
    j = 0
    while j * n <= N:
        c[j * n] = coef * s**j
        coef = coef * (p - j) / (j + 1)
        j += 1
    return TaylorSeries(c)


# ---------------------------------------------------------------------------
# named families

FAMILIES = (
    "PhiN", "MonomialPerturb", "KoebeType", "HalfKoebe", "ExpLine",
    "F1Witness", "F1ZeroWitness", "F1HalfWitness", "F2Witness", "F3Witness",
    "JanowskiExtremal", "MBetaExtremal", "Fun1", "Fun2", "TildeCubic",
)


@dataclass(frozen=True)
class FamilySpec:
    """A named closed-form function ``f(z) = z + ...``.

    Parameters not used by a family are ignored. ``a`` is the perturbation
    coefficient of ``MonomialPerturb``; ``A``/``B`` and ``beta`` follow the
    usual Janowski and M(beta) conventions.
    """

    family: str
    n: int = 1
    a: complex = 0.0
    A: float = 0.0
    B: float = 0.0
    beta: float = 0.0

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ParamOutOfDomain(f"unknown family {self.family!r}")
        fam, n = self.family, self.n
        if n < 1:
            raise ParamOutOfDomain("n must be >= 1")
        if fam in ("PhiN", "MonomialPerturb") and n < 2:
            raise ParamOutOfDomain(f"{fam} needs n >= 2")
        if fam == "MonomialPerturb" and abs(self.a) >= 1:
            raise ParamOutOfDomain("|a_n| must be < 1")
        if fam in ("KoebeType", "HalfKoebe") and abs(self.A) > 1:
            raise ParamOutOfDomain("|A| must be <= 1")
        if fam == "JanowskiExtremal" and not (-1 <= self.B < self.A <= 1):
            raise ParamOutOfDomain(f"need -1 <= B < A <= 1, got A={self.A}, B={self.B}")
        if fam == "MBetaExtremal" and not self.beta > 1:
            raise ParamOutOfDomain("beta must exceed 1")
        if fam == "F3Witness" and not -1 <= self.A <= 1:
            raise ParamOutOfDomain("A must lie in [-1, 1]")
        if fam == "F1Witness" and self.beta not in (0.0, 0.5):
            raise ParamOutOfDomain("beta must be 0 or 1/2")

    @property
    def label(self) -> str:
        used = {
            "PhiN": ("n",), "MonomialPerturb": ("n", "a"), "KoebeType": ("A",),
            "HalfKoebe": ("A",), "ExpLine": ("A",), "F1Witness": ("n", "beta"),
            "F1ZeroWitness": ("n",), "F1HalfWitness": ("n",), "F2Witness": ("n",),
            "F3Witness": ("n", "A"), "JanowskiExtremal": ("n", "A", "B"),
            "MBetaExtremal": ("n", "beta"),
        }.get(self.family, ())
        args = ", ".join(f"{k}={getattr(self, k)!r}" for k in used)
        return f"{self.family}({args})"

    def ratio(self, z):
        """``f(z)/z`` in closed form (vectorised)."""
        return _ratio(self, np.asarray(z, dtype=complex))

    def logderiv(self, z):
        """``z f'(z)/f(z)`` in closed form (vectorised)."""
        return _logderiv(self, np.asarray(z, dtype=complex))


def _ratio(spec: FamilySpec, z: np.ndarray) -> np.ndarray:
    fam, n, A, B = spec.family, spec.n, spec.A, spec.B
    zn = z**n
    if fam == "PhiN":
        return np.exp(phi_exponent(n, 96).horner(z))
    if fam == "MonomialPerturb":
        return 1 + spec.a * z ** (n - 1)
    if fam == "KoebeType":
        return (1 - A * z) ** -2
    if fam == "HalfKoebe":
        return 1 / (1 - A * z)
    if fam == "ExpLine":
        return np.exp(A * z)
    if fam == "F1Witness":
        return 1 + (1 - 2 * spec.beta) * zn
    if fam == "F1ZeroWitness":
        return (1 + zn) / (1 - zn) ** 2
    if fam == "F1HalfWitness":
        return (1 - zn) ** -2
    if fam == "F2Witness":
        return (1 + zn) * (1 - zn) ** (-1.0 / n)
    if fam == "F3Witness":
        return (1 + zn) ** 2 * (1 - zn) ** (-2 - (1 + A) / n)
    if fam == "JanowskiExtremal":
        if B == 0:
            return np.exp(A * zn / n)
        return (1 + B * zn) ** ((A - B) / (n * B))
    if fam == "MBetaExtremal":
        return (1 - zn) ** (-2 * (1 - spec.beta) / n)
    if fam == "Fun1":
        return np.exp(z / 3 + z**2 / 36)
    if fam == "Fun2":
        si, _ci = special.sici(z / 3)
        return np.exp(si)
    if fam == "TildeCubic":
        return 1 + z**2 / 4
    raise ParamOutOfDomain(fam)  # pragma: no cover


def _logderiv(spec: FamilySpec, z: np.ndarray) -> np.ndarray:
    fam, n, A, B = spec.family, spec.n, spec.A, spec.B
    zn = z**n
    if fam == "PhiN":
        return np.cosh(np.sqrt(z ** (n - 1)))
    if fam == "MonomialPerturb":
        x = spec.a * z ** (n - 1)
        return (1 + n * x) / (1 + x)
    if fam == "KoebeType":
        return (1 + A * z) / (1 - A * z)
    if fam == "HalfKoebe":
        return 1 / (1 - A * z)
    if fam == "ExpLine":
        return 1 + A * z
    if fam == "F1Witness":
        b = 1 - 2 * spec.beta
        return 1 + n * b * zn / (1 + b * zn)
    if fam == "F1ZeroWitness":
        return 1 + n * zn / (1 + zn) + 2 * n * zn / (1 - zn)
    if fam == "F1HalfWitness":
        return 1 + 2 * n * zn / (1 - zn)
    if fam == "F2Witness":
        return 1 + n * zn / (1 + zn) + zn / (1 - zn)
    if fam == "F3Witness":
        return 1 + 2 * n * zn / (1 + zn) + (2 * n + 1 + A) * zn / (1 - zn)
    if fam == "JanowskiExtremal":
        return (1 + A * zn) / (1 + B * zn)
    if fam == "MBetaExtremal":
        return (1 + (1 - 2 * spec.beta) * zn) / (1 - zn)
    if fam == "Fun1":
        return 1 + z / 3 + z**2 / 18
    if fam == "Fun2":
        return 1 + np.sin(z / 3)
    if fam == "TildeCubic":
        return (1 + 3 * z**2 / 4) / (1 + z**2 / 4)
    raise ParamOutOfDomain(fam)  # pragma: no cover


def family_series(spec: FamilySpec, N: int = DEFAULT_ORDER) -> TaylorSeries:
    """Taylor coefficients of the named family member up to ``z**N``."""
    fam, n, A, B = spec.family, spec.n, spec.A, spec.B
    one = TaylorSeries.monomial(0, N)
    if fam == "PhiN":
        return build_phi_n(n, N)
    if fam == "MonomialPerturb":
        ratio = one + TaylorSeries.monomial(n - 1, N, spec.a)
    elif fam == "KoebeType":
        ratio = TaylorSeries([k * A ** (k - 1) for k in range(1, N + 2)])
    elif fam == "HalfKoebe":
        ratio = TaylorSeries([A**k for k in range(N + 1)])
    elif fam == "ExpLine":
        ratio = TaylorSeries([A**k / math.factorial(k) for k in range(N + 1)])
    elif fam == "F1Witness":
        ratio = one + TaylorSeries.monomial(n, N, 1 - 2 * spec.beta)
    elif fam == "F1ZeroWitness":
        ratio = _binomial_series(1, 1, n, N) * _binomial_series(-2, -1, n, N)
    elif fam == "F1HalfWitness":
        ratio = _binomial_series(-2, -1, n, N)
    elif fam == "F2Witness":
        ratio = _binomial_series(1, 1, n, N) * _binomial_series(-1.0 / n, -1, n, N)
    elif fam == "F3Witness":
        ratio = _binomial_series(2, 1, n, N) * _binomial_series(-2 - (1 + A) / n, -1, n, N)
    elif fam == "JanowskiExtremal":
        if B == 0:
            ratio = series_exp(TaylorSeries.monomial(n, N, A / n))
        else:
            ratio = _binomial_series((A - B) / (n * B), B, n, N)
    elif fam == "MBetaExtremal":
        ratio = _binomial_series(-2 * (1 - spec.beta) / n, -1, n, N)
    elif fam == "Fun1":
        ratio = series_exp(TaylorSeries.monomial(1, N, 1 / 3) + TaylorSeries.monomial(2, N, 1 / 36))
    elif fam == "Fun2":
        ratio = series_exp(si_series(1 / 3, N))
    elif fam == "TildeCubic":
        ratio = one + TaylorSeries.monomial(2, N, 0.25)
    else:  # pragma: no cover
        raise ParamOutOfDomain(fam)
    return ratio.shift(1)


def series_eval(s: TaylorSeries, z, derivative: int = 0):
    """Horner evaluation of ``s`` (or its ``derivative``-th derivative) at ``z``."""
    za = np.asarray(z, dtype=complex)
    if np.any(np.abs(za) > ACCURACY_RADIUS):
        raise OutsideAccuracyDomain(f"|z| must be <= {ACCURACY_RADIUS}")
    for _ in range(derivative):
        s = s.derivative()
    return s.horner(z)


def _rho_minus_one_over_t(sign: float):
    """``(cosh(sqrt(sign*s)) - 1)/s`` for s > 0, with its Taylor limit near 0."""
    if sign > 0:
        f = lambda s: (math.cosh(math.sqrt(s)) - 1.0) / s
    else:
        f = lambda s: (math.cos(math.sqrt(s)) - 1.0) / s
    coeffs = [sign ** (k + 1) / math.factorial(2 * k + 2) for k in range(5)]
    return numerics.with_series_limit(f, coeffs)


def phi_real(x: float, cfg: numerics.NumericConfig = numerics.DEFAULT) -> float:
    """``phi_rho(x)`` for real ``x`` in [-1, 1] by quadrature of the exponent."""
    if x == 0:
        return 0.0
    r = abs(x)
    expo = numerics.integrate(_rho_minus_one_over_t(math.copysign(1.0, x)), 0.0, r, cfg)
    return x * math.exp(expo)


def growth_distortion(r: float, cfg: numerics.NumericConfig = numerics.DEFAULT):
    """Growth and distortion bounds ``(lower, upper, dlower, dupper)`` at ``|z| = r``.

    ``lower = -phi(-r)`` and ``upper = phi(r)``; derivative bounds come from
    ``z phi'/phi = rho(z)``.
    """
    if not 0 < r <= 1:
        raise ROutOfRange(f"r must lie in (0, 1], got {r}")
    up = phi_real(r, cfg)
    low = -phi_real(-r, cfg)
    dup = up * math.cosh(math.sqrt(r)) / r
    dlow = low * math.cos(math.sqrt(r)) / r
    return low, up, dlow, dup


def coefficients(f: "TaylorSeries | FamilySpec", order: int = DEFAULT_ORDER) -> np.ndarray:
    """Coefficient array for a series or family (helper for the criteria module)."""
    if isinstance(f, FamilySpec):
        f = family_series(f, order)
    return np.asarray(f.coeffs)
