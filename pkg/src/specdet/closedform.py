"""Closed-form reference values: homogeneous-potential determinants, Airy and
harmonic determinants, the square-well family, and the binomial-potential
family with its generalized-spectrum determinants.

Everything here is an independent cross-check target for the numeric routes,
so each evaluator follows its defining formula directly, with no algebraic
shortcuts beyond Gamma-function identities.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np
import scipy.special as sc

from . import specfun
from .specfun import SpecfunDomainError

_SQPI = math.sqrt(math.pi)


def _nu(n: int) -> float:
    return 1.0 / (n + 2)


def _as_scalar(z: complex):
    z = complex(z)
    return z.real if z.imag == 0.0 else z


def _rgamma(z: complex) -> complex:
    """1/Gamma, zero at the poles."""
    z = complex(z)
    if z.imag == 0.0 and z.real <= 0 and abs(z.real - round(z.real)) < 1e-13:
        return 0.0
    return cmath.exp(-specfun.log_gamma(z))


def homogeneous_d0(N: int) -> tuple[float, float, float]:
    """(D^+(0), D^-(0), D(0)) for the pure q^N potential on the half line."""
    if N < 1:
        raise ValueError("N must be >= 1")
    nu = _nu(N)
    dplus = math.gamma(1.0 - nu) / (nu ** (N * nu / 2.0) * _SQPI)
    dminus = math.gamma(nu) * nu ** (N * nu / 2.0) / _SQPI
    return dplus, dminus, 1.0 / math.sin(nu * math.pi)


def airy_determinants(lam: complex) -> tuple[complex, complex]:
    """(D^+, D^-) of the linear potential: -2 sqrt(pi) Ai'(lam), 2 sqrt(pi) Ai(lam)."""
    ai, aip = specfun.airy(lam)
    return _as_scalar(-2.0 * _SQPI * aip), _as_scalar(2.0 * _SQPI * ai)


def harmonic_determinants(lam: complex, v: float = 1.0) -> tuple[complex, complex]:
    """(D^+, D^-) of v*q^2 (Gamma closed form; v > 0 enters by the dilation
    law with the order-one trace identity supplying the exponent)."""
    if v <= 0:
        raise ValueError("v must be > 0")
    a = math.sqrt(v)
    x = lam / a
    dplus = (math.sqrt(2.0) * v ** 0.125) ** (1.0 - x) * math.sqrt(2.0 * math.pi) \
        * _rgamma((1.0 + x) / 4.0)
    dminus = (math.sqrt(2.0) * v ** 0.125) ** (-1.0 - x) * math.sqrt(2.0 * math.pi) \
        * _rgamma((3.0 + x) / 4.0)
    return _as_scalar(dplus), _as_scalar(dminus)


def binomial_determinants(N: int, v: complex) -> tuple[complex, complex]:
    """Zero-energy (D^+, D^-) of q^N + v q^{N/2-1}, N even, in closed form."""
    if N % 2 or N < 2:
        raise ValueError("N must be even and >= 2")
    nu = _nu(N)
    dplus = -(2.0 ** (-v / N) * (4.0 * nu) ** (nu * (v + 1.0) + 0.5)
              * math.gamma(-2.0 * nu) * _rgamma(nu * (v - 1.0) + 0.5))
    dminus = (2.0 ** (-v / N) * (4.0 * nu) ** (nu * (v - 1.0) + 0.5)
              * math.gamma(2.0 * nu) * _rgamma(nu * (v + 1.0) + 0.5))
    return _as_scalar(dplus), _as_scalar(dminus)


def binomial_whole_line(N: int, v: float) -> float:
    """Zero-energy determinant of q^N + v q^{N/2-1} on the whole real line,
    N = 0 mod 4: cos(pi nu v)/sin(pi nu)."""
    if N % 4:
        raise ValueError("N must be a multiple of 4")
    nu = _nu(N)
    return math.cos(math.pi * nu * v) / math.sin(math.pi * nu)


def binomial_gen_determinants(N: int, v: float) -> tuple[float, float]:
    """Generalized-spectrum determinants of the binomial family:
    nu^{nu(v -+ 1)} sqrt(2 pi) / Gamma(nu(v -+ 1) + 1/2)."""
    if N % 2 or N < 2:
        raise ValueError("N must be even and >= 2")
    nu = _nu(N)
    dplus = nu ** (nu * (v - 1.0)) * math.sqrt(2.0 * math.pi) \
        * _rgamma(nu * (v - 1.0) + 0.5)
    dminus = nu ** (nu * (v + 1.0)) * math.sqrt(2.0 * math.pi) \
        * _rgamma(nu * (v + 1.0) + 0.5)
    return _as_scalar(dplus), _as_scalar(dminus)


def square_well(kind: str, arg: complex = 0.0):
    """Square-well ([-1,1], Dirichlet walls) spectral functions.

    kind: 'fredholm_plus'/'fredholm_minus' -> Delta(lam); 'zeta_plus'/
    'zeta_minus' -> Z(s); 'd0_plus'/'d0_minus' -> D(0) = 2; 'delta'/'d0'
    for the whole-interval combinations.
    """
    if kind in ("d0_plus", "d0_minus"):
        return 2.0
    if kind == "d0":
        return 4.0
    if kind in ("fredholm_plus", "fredholm_minus", "fredholm"):
        lam = complex(arg)
        rt = cmath.sqrt(-lam)
        if kind == "fredholm_plus":
            val = cmath.cos(rt)
        elif kind == "fredholm_minus":
            val = 1.0 if rt == 0 else cmath.sin(rt) / rt
        else:
            val = 1.0 if rt == 0 else cmath.sin(2.0 * rt) / (2.0 * rt)
        return _as_scalar(val)
    if kind in ("zeta_plus", "zeta_minus", "zeta"):
        s = complex(arg)
        if s.imag != 0:
            raise SpecfunDomainError("square-well zeta implemented for real s")
        s = s.real
        if abs(2.0 * s - 1.0) < 1e-12:
            raise specfun.SpecfunDomainError("zeta pole at s=1/2")
        z2 = specfun.riemann_zeta(2.0 * s)
        if kind == "zeta_plus":
            return (2.0 ** (2 * s) - 1.0) * math.pi ** (-2 * s) * z2
        if kind == "zeta_minus":
            return math.pi ** (-2 * s) * z2
        return (2.0 / math.pi) ** (2 * s) * z2
    raise ValueError(f"unknown square-well kind {kind!r}")


def binomial_eigenfunction(N: int, v: float, q: float) -> float:
    """Recessive zero-energy solution of q^N + v q^{N/2-1}, N even, q > 0,
    by the confluent-hypergeometric route with the asymptotic normalization
    2^{-v/N} q^{-N/4 - v/2} exp(-2 nu q^{N/2+1})."""
    if N % 2 or N < 2:
        raise ValueError("N must be even and >= 2")
    if q <= 0:
        raise ValueError("q must be > 0")
    nu = _nu(N)
    z = 4.0 * nu * q ** (1.0 + N / 2.0)
    a = nu * (v - 1.0) + 0.5
    b = 1.0 - 2.0 * nu
    u = float(sc.hyperu(a, b, z))
    return 2.0 ** (-v / N) * (4.0 * nu) ** (nu * (v - 1.0) + 0.5) \
        * math.exp(-2.0 * nu * q ** (1.0 + N / 2.0)) * u


def binomial_eigenfunction_boundary(N: int, v: float) -> tuple[float, float]:
    """(Psi(0), Psi'(0)) of the recessive zero-energy solution via the
    connection formula U(a,b,z) = G(1-b)/G(1+a-b) M(a,b,z)
    + G(b-1)/G(a) z^{1-b} M(1+a-b, 2-b, z)."""
    nu = _nu(N)
    a = nu * (v - 1.0) + 0.5
    b = 1.0 - 2.0 * nu
    pref = 2.0 ** (-v / N) * (4.0 * nu) ** (nu * (v - 1.0) + 0.5)
    # z -> 0: U -> Gamma(1-b)/Gamma(1+a-b); the z^{1-b} branch is linear in q
    psi0 = pref * math.gamma(1.0 - b) * float(_rgamma(1.0 + a - b))
    # z^{1-b} = (4 nu)^{2 nu} q exactly, so d/dq picks up (4 nu)^{2 nu}
    dpsi0 = pref * math.gamma(b - 1.0) * float(_rgamma(a)) * (4.0 * nu) ** (2.0 * nu)
    return psi0, dpsi0


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    description: str
    domain: str
    evaluate: Callable


CATALOG: tuple[CatalogEntry, ...] = (
    CatalogEntry("homogeneous-d0", "zero-argument determinants of q^N",
                 "integer N >= 1", homogeneous_d0),
    CatalogEntry("airy-determinants", "linear-potential determinants from Ai",
                 "complex lam, |lam| <= 30", airy_determinants),
    CatalogEntry("harmonic-determinants", "Gamma-function determinants of v q^2",
                 "complex lam off poles, v > 0", harmonic_determinants),
    CatalogEntry("binomial-determinants",
                 "zero-energy determinants of q^N + v q^{N/2-1}",
                 "even N >= 2, real or complex v", binomial_determinants),
    CatalogEntry("binomial-whole-line",
                 "whole-line zero-energy determinant of the binomial family",
                 "N = 0 mod 4, real v", binomial_whole_line),
    CatalogEntry("binomial-generalized",
                 "determinants of the binomial generalized spectrum",
                 "even N >= 2, real v", binomial_gen_determinants),
    CatalogEntry("square-well", "square-well Fredholm/zeta/determinant values",
                 "per kind", square_well),
    CatalogEntry("binomial-eigenfunction",
                 "recessive zero-energy solution of the binomial family",
                 "even N >= 2, q > 0", binomial_eigenfunction),
)


def catalog() -> tuple[CatalogEntry, ...]:
    return CATALOG
