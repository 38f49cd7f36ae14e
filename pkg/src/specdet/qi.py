"""The quartic-well zero-energy determinant pair and its spectral functions.

qi(v) = (Q+, Q-) are the Neumann/Dirichlet determinants of q^4 + v q^2 at
zero spectral parameter, entire of order 3/2 in v with Airy-like asymptotics;
their negative zeros v = -w_k form a generalized spectrum whose zeta values
obey the quartic sum rules with parities swapped.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .closedform import binomial_determinants, harmonic_determinants
from .potential import PolynomialPotential
from .recessive import determinant_pair
from .spectrum import GeneralizedSpectrum, eigenvalues, generalized_zeros
from .zetadet import (determinant_spectral, extrapolate_levels, zeta,
                      zprime0, closed_zp1)

J = cmath.exp(2j * math.pi / 3.0)
_SQPI = math.sqrt(math.pi)


@dataclass(frozen=True)
class QiEval:
    v: complex
    qi_plus: complex
    qi_minus: complex
    route: str
    error_estimate: float


@dataclass(frozen=True)
class QiZeroFunctions:
    zeros_plus: GeneralizedSpectrum
    zeros_minus: GeneralizedSpectrum
    z_plus: dict[int, float]       # zeta values of the zero spectrum, n >= 1
    z_minus: dict[int, float]
    z_errs_plus: dict[int, float]
    z_errs_minus: dict[int, float]
    zp1_closed: float              # skew combination at s=1, closed form
    zprime0_plus: float
    zprime0_minus: float
    d0_plus: float                 # Stirling constants D4(0)/D2(0) per parity
    d0_minus: float


def qi_eval(v: complex, route: str = "recessive", K: int | None = None,
            tol: float = 1e-10) -> QiEval:
    """(Qi+, Qi-) at coupling v.

    recessive: one inward integration of q^4 + v q^2 at zero spectral
    parameter (complex v allowed while the real ray stays recessive).
    spectral: Euler-Maclaurin determinants over the computed eigenvalues of
    the same operator (real v only, the method of the figure data).
    """
    if route == "recessive":
        d = determinant_pair(PolynomialPotential(4, {2: v}), 0.0,
                             rtol=max(tol * 1e-2, 1e-13))
        return QiEval(v=v, qi_plus=d.dplus, qi_minus=d.dminus, route=route,
                      error_estimate=d.error_estimate)
    if route == "spectral":
        v = complex(v)
        if v.imag != 0:
            raise ValueError("spectral route requires real v")
        pot = PolynomialPotential(4, {2: v.real})
        K = K or 48
        sp = eigenvalues(pot, "+", K, tol=min(tol, 1e-9))
        sm = eigenvalues(pot, "-", K, tol=min(tol, 1e-9))
        dp = determinant_spectral(sp, 0.0, tol=tol)
        dm = determinant_spectral(sm, 0.0, tol=tol)
        return QiEval(v=v.real, qi_plus=dp.value, qi_minus=dm.value,
                      route=route,
                      error_estimate=dp.error_estimate + dm.error_estimate)
    raise ValueError(f"unknown route {route!r}")


def qi_asymptotic(v: float, side: str = "decay") -> tuple[float, float]:
    """Large-|v| forms: on the decay side (v > 0)

        Qi+ ~ 2 sqrt(pi)/Gamma(1/4) v^{1/8} e^{-v^{3/2}/3},
        Qi- ~ sqrt(pi)/Gamma(3/4) v^{-1/8} e^{-v^{3/2}/3};

    on the oscillatory side (argument w = -v > 0) the cosine forms with
    phases +-pi/8 and doubled amplitudes."""
    if side == "decay":
        if v <= 0:
            raise ValueError("decay side needs v > 0")
        damp = math.exp(-v ** 1.5 / 3.0)
        return (2.0 * _SQPI / math.gamma(0.25) * v ** 0.125 * damp,
                _SQPI / math.gamma(0.75) * v ** (-0.125) * damp)
    if side == "oscillatory":
        w = -v if v < 0 else v
        if w <= 0:
            raise ValueError("oscillatory side needs w > 0")
        ph = w ** 1.5 / 3.0
        return (4.0 * _SQPI / math.gamma(0.25) * w ** 0.125
                * math.cos(ph + math.pi / 8.0),
                2.0 * _SQPI / math.gamma(0.75) * w ** (-0.125)
                * math.cos(ph - math.pi / 8.0))
    raise ValueError(f"unknown side {side!r}")


def _arg_trace(f, targets: np.ndarray, phase_rate) -> np.ndarray:
    """Continuously unwrapped arg of f along [0, max(targets)].

    f(x) complex; phase_rate(x) bounds |d arg/dx| to keep steps under pi/2."""
    targets = np.sort(np.asarray(targets, dtype=float))
    out = np.empty(len(targets))
    x = 0.0
    total = 0.0
    prev = f(0.0)
    total = cmath.phase(prev)  # real positive start: 0
    it = 0
    for i, t in enumerate(targets):
        while x < t:
            step = min(0.4, math.pi / (2.5 * max(phase_rate(x), 0.3)), t - x)
            x += step
            cur = f(x)
            total += cmath.phase(cur / prev)
            prev = cur
            it += 1
            if it > 100000:
                raise RuntimeError("phase tracing step limit")
        out[i] = total
    return out


def qi_exact_quantization(w, parity: str, rtol: float = 1e-11) -> np.ndarray:
    """(2/pi) arg Qi^+-(-j w), phase-continuous from w=0.

    At the k-th zero of the matching parity this equals k + 1/2 +- 1/6."""
    pol = 0 if parity in ("+", "even") else 1
    ws = np.atleast_1d(np.asarray(w, dtype=float))

    def f(x: float) -> complex:
        d = determinant_pair(PolynomialPotential(4, {2: -J * x}), 0.0, rtol=rtol)
        return d.dplus_mantissa if pol == 0 else d.dminus_mantissa

    args = _arg_trace(f, ws, lambda x: 0.5 * math.sqrt(max(x, 1e-6)))
    res = 2.0 / math.pi * args
    order = np.argsort(np.argsort(np.asarray(w, dtype=float).ravel()))
    res = res[order]
    return res if np.ndim(w) else float(res[0])


def qi_zero_zeta(n_max: int = 3, K: int = 64, tol: float = 1e-9,
                 K_eml: int | None = None) -> QiZeroFunctions:
    """Zeta data of the Qi-zero spectra: values at integers through n_max by
    Euler-Maclaurin over K computed zeros, the closed-form skew value at s=1,
    Z'(0) per parity, and the Stirling constants."""
    zp = generalized_zeros(("qi", "+"), K, tol=tol)
    zm = generalized_zeros(("qi", "-"), K, tol=tol)
    vals_p, vals_m, errs_p, errs_m = {}, {}, {}, {}
    for n in range(1, n_max + 1):
        a = zeta(zp, float(n), tol=tol, K=K_eml)
        b = zeta(zm, float(n), tol=tol, K=K_eml)
        vals_p[n], errs_p[n] = float(a.value.real), a.error_estimate
        vals_m[n], errs_m[n] = float(b.value.real), b.error_estimate
    d4 = binomial_determinants(4, 0.0)
    d2 = harmonic_determinants(0.0)
    return QiZeroFunctions(
        zeros_plus=zp, zeros_minus=zm, z_plus=vals_p, z_minus=vals_m,
        z_errs_plus=errs_p, z_errs_minus=errs_m,
        zp1_closed=closed_zp1_generalized(4),
        zprime0_plus=float(extrapolate_levels(zp, lambda s: zprime0(s, tol=tol))),
        zprime0_minus=float(extrapolate_levels(zm, lambda s: zprime0(s, tol=tol))),
        d0_plus=float(d4[0].real / d2[0].real),
        d0_minus=float(d4[1].real / d2[1].real))


def closed_zp1_generalized(N: int) -> float:
    """Skew zeta value at s=1 of the generalized (zero-energy) spectrum:
    sin(nu pi)/(2 sqrt pi) (2nu)^{2-8nu} G(3nu)G(4nu)G(5nu)/G(4nu+1/2)."""
    nu = 1.0 / (N + 2)
    g = math.gamma
    return (math.sin(nu * math.pi) / (2.0 * _SQPI)
            * (2.0 * nu) ** (2.0 - 8.0 * nu)
            * g(3.0 * nu) * g(4.0 * nu) * g(5.0 * nu) / g(4.0 * nu + 0.5))


def qi_sum_rules(zfns: QiZeroFunctions) -> dict[str, float]:
    """Residuals of the zero-spectrum sum rules (quartic rules with the
    parities swapped) plus the Taylor cross-check of the first log-derivative."""
    zp, zm = zfns.z_plus, zfns.z_minus
    out = {
        "rule1": zm[1] - 2.0 * zp[1],
        "skew-vs-closed": (zp[1] - zm[1]) - zfns.zp1_closed,
    }
    if 2 in zp:
        out["rule2"] = (2.0 * zm[2] - zp[2]) - 3.0 * (zm[1] - zp[1]) ** 2
    if 3 in zp:
        z1 = zp[1] + zm[1]
        z2 = zp[2] + zm[2]
        z3 = zp[3] + zm[3]
        out["rule3"] = z3 - (z1 ** 3 / 6.0 - z1 * z2 / 2.0)
    # [-log Qi^+]'(0) = -Z^+(1): finite difference of the recessive route
    h = 1e-3
    qp = [qi_eval(x, tol=1e-11).qi_plus.real for x in (-2 * h, -h, h, 2 * h)]
    dlog = (-math.log(qp[3]) + 8 * math.log(qp[2])
            - 8 * math.log(qp[1]) + math.log(qp[0])) / (12 * h)
    out["taylor-n1"] = dlog - zp[1]
    return out


def figure_row(v: float, tol: float = 1e-10) -> dict[str, float]:
    """One row of the figure-reproduction data set."""
    ev = qi_eval(v, "recessive", tol=tol)
    qp, qm = ev.qi_plus.real, ev.qi_minus.real
    if v > 0:
        ap, am = qi_asymptotic(v, "decay")
    elif v < 0:
        ap, am = qi_asymptotic(v, "oscillatory")
    else:
        ap = am = float("nan")
    return {"v": v, "qi_plus": qp, "qi_minus": qm,
            "asym_plus": ap, "asym_minus": am,
            "log10_abs_plus": math.log10(abs(qp)) if qp else -math.inf,
            "log10_abs_minus": math.log10(abs(qm)) if qm else -math.inf}
