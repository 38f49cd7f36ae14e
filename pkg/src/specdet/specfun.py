"""Special-function kernel shared by the closed-form and verification layers.

Gamma/Airy/Bessel evaluations are delegated to scipy.special (mature, well
past the 1e-10..1e-12 targets here); the Dirichlet series functions are
implemented directly with accelerated alternating sums plus reflection, since
scipy covers neither beta nor zeta left of the critical strip in one call.
All functions are pure and reentrant.
"""
from __future__ import annotations

import cmath
import math

import numpy as np
import scipy.special as sc


class SpecfunDomainError(ValueError):
    pass


class SpecfunRangeError(ArithmeticError):
    pass


def log_gamma(z: complex) -> complex:
    """Principal branch of log Gamma; rejects the poles at 0, -1, -2, ..."""
    z = complex(z)
    if z.imag == 0.0 and z.real <= 0.0 and abs(z.real - round(z.real)) < 1e-12:
        raise SpecfunDomainError(f"log_gamma pole at z={z.real:.0f}")
    return complex(sc.loggamma(z))


def gamma(z: complex) -> complex:
    g = cmath.exp(log_gamma(z))
    return g.real if complex(z).imag == 0.0 else g


def airy(z: complex) -> tuple[complex, complex]:
    """(Ai(z), Ai'(z)); raises on overflow instead of returning inf."""
    ai, aip, _, _ = sc.airy(z)
    if not (np.isfinite(complex(ai).real) and np.isfinite(complex(ai).imag)
            and np.isfinite(complex(aip).real) and np.isfinite(complex(aip).imag)):
        raise SpecfunRangeError(f"airy overflow at z={z}")
    if isinstance(z, complex) and z.imag != 0.0:
        return complex(ai), complex(aip)
    return float(ai.real) if hasattr(ai, "real") else float(ai), \
        float(aip.real) if hasattr(aip, "real") else float(aip)


def bessel_k(nu: float, x: float) -> float:
    if x <= 0:
        raise SpecfunDomainError("bessel_k requires x > 0")
    return float(sc.kv(nu, x))


def bessel_i(nu: float, x: float) -> float:
    if x <= 0:
        raise SpecfunDomainError("bessel_i requires x > 0")
    return float(sc.iv(nu, x))


def bessel_j(nu: float, x: float) -> float:
    if x <= 0:
        raise SpecfunDomainError("bessel_j requires x > 0")
    return float(sc.jv(nu, x))


def _alternating_sum(term, n: int = 64) -> float:
    """Cohen-Rodriguez Villegas-Zagier acceleration of sum (-1)^k term(k)."""
    d = (3.0 + math.sqrt(8.0)) ** n
    d = (d + 1.0 / d) / 2.0
    b = -1.0
    c = -d
    s = 0.0
    for k in range(n):
        c = b - c
        s += c * term(k)
        b *= (k + n) * (k - n) / ((k + 0.5) * (k + 1.0))
    return s / d


def riemann_zeta(s: float) -> float:
    """zeta(s) for real s != 1 (accelerated eta series + reflection)."""
    s = float(s)
    if s == 1.0:
        raise SpecfunDomainError("zeta pole at s=1")
    if s == 0.0:
        return -0.5
    if s >= 0.5:
        eta = _alternating_sum(lambda k: (k + 1.0) ** (-s))
        return eta / -math.expm1((1.0 - s) * math.log(2.0))
    # reflection: zeta(s) = 2^s pi^{s-1} sin(pi s/2) Gamma(1-s) zeta(1-s)
    return (2.0 ** s * math.pi ** (s - 1.0) * math.sin(math.pi * s / 2.0)
            * math.gamma(1.0 - s) * riemann_zeta(1.0 - s))


def dirichlet_beta(s: float) -> float:
    """beta(s) = sum (-1)^k (2k+1)^{-s}, continued to all real s."""
    s = float(s)
    if s >= 0.5:
        return _alternating_sum(lambda k: (2.0 * k + 1.0) ** (-s))
    # beta(s) = (pi/2)^{s-1} cos(pi s/2) Gamma(1-s) beta(1-s)
    return ((math.pi / 2.0) ** (s - 1.0) * math.cos(math.pi * s / 2.0)
            * math.gamma(1.0 - s) * dirichlet_beta(1.0 - s))
