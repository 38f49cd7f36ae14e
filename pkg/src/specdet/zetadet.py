"""Zeta-regularized spectral functions as functionals of a computed spectrum.

Continuation of Z(s, lam) and log D(lam) by Euler-Maclaurin counting tails:
the partial sum over levels below E_K is completed by the midpoint term and
the counting-coefficient tail, the K -> infinity limit being accelerated by
power-law extrapolation over a K-ladder.  Levels beyond the polished range
come from the spectrum's fitted counting model, which is adequate inside
these tails.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .potential import z0_pair
from .spectrum import GeneralizedSpectrum, Spectrum


class ZetaPoleError(ArithmeticError):
    def __init__(self, s, residue):
        super().__init__(f"zeta pole at s={s} (residue {residue:.8g})")
        self.s = s
        self.residue = residue


class UnsupportedOrderError(ValueError):
    pass


@dataclass(frozen=True)
class ZetaEval:
    s: complex
    lam: complex
    value: complex
    K_used: int
    tail_model: dict
    error_estimate: float

    def to_json_dict(self) -> dict:
        return {"s": _jsonc(self.s), "lambda": _jsonc(self.lam),
                "value": _jsonc(self.value), "K_used": self.K_used,
                "err": self.error_estimate}


@dataclass(frozen=True)
class DeterminantValue:
    lam: complex
    value: complex
    route: str                     # spectral | recessive | closed-form
    error_estimate: float
    log_value: complex = None     # branch-tracked log (spectral route)

    def to_json_dict(self) -> dict:
        return {"lambda": _jsonc(self.lam), "value": _jsonc(self.value),
                "route": self.route, "err": self.error_estimate}


def _jsonc(z):
    z = complex(z)
    return z.real if z.imag == 0 else [z.real, z.imag]


# -- Euler-Maclaurin building blocks ----------------------------------------


def _tail_terms(spec: Spectrum):
    rs = list(spec.bs_exps) + list(spec.fit_exps)
    bs = list(spec.bs_vals) + list(spec.fit_vals)
    return rs, bs


def _eml_partial(spec: Spectrum, levels: np.ndarray, m: int, s: complex,
                 lam: complex, finite_part: bool = False) -> complex:
    """Partial continuation with m levels plus the E_m midpoint and tail.

    The tail integrates the counting density against (E+lam)^{-s} expanded to
    second order in lam/E.  With finite_part, a tail term whose exponent
    collides with s contributes its pole-subtracted value -(r b/2) log E_K."""
    E = levels[:m]
    EK = levels[m]
    ssum = np.sum((E + lam) ** (-s)) + 0.5 * (EK + lam) ** (-s)
    rs, bs = _tail_terms(spec)
    tail = 0.0 + 0j
    for r, b in zip(rs, bs):
        if finite_part and abs(s - r) < 1e-12:
            t = -r * b * math.log(EK) / 2.0
        else:
            t = r * b * EK ** (r - s) / (2.0 * (s - r))
        if lam != 0:
            t -= r * b * s * lam * EK ** (r - s - 1) / (2.0 * (s + 1 - r))
            t += (r * b * s * (s + 1) * lam * lam
                  * EK ** (r - s - 2) / (4.0 * (s + 2 - r)))
        tail += t
    return complex(ssum + tail)


def _ladder_extrapolate(f, m_top: int, p: float, second_gap: float = 1.0):
    """Eliminate errors a*m^-p + b*m^-(p+gap) from a 3-point K-ladder.

    Returns (limit, error_estimate, raw_top)."""
    ms = [m_top // 4, m_top // 2, m_top]
    vals = [f(m) for m in ms]
    x = np.array([m ** -p for m in ms], dtype=float)
    y = np.array([m ** -(p + second_gap) for m in ms], dtype=float)
    A = np.column_stack([np.ones(3), x, y])
    try:
        coef = np.linalg.solve(A, np.array(vals, dtype=complex))
        limit = coef[0]
    except np.linalg.LinAlgError:
        limit = vals[-1]
    err = abs(limit - vals[-1]) * 0.25 + abs(vals[-1] - vals[-2]) * 0.02
    return complex(limit), float(err), complex(vals[-1])


def _check_pole(spec: Spectrum, s: complex) -> None:
    if abs(complex(s).imag) > 1e-8:
        return
    sr = complex(s).real
    for r, b in zip(spec.bs_exps, spec.bs_vals):
        if r > 0 and abs(sr - r) < 1e-8 and abs(b) > 0:
            # residue c_rho/Gamma(-rho) = b*r/2 at s = r
            raise ZetaPoleError(sr, b * r / 2.0)


def zeta(spec: Spectrum, s: complex, lam: complex = 0.0, K: int | None = None,
         tol: float = 1e-9, accelerate: bool = True,
         finite_part: bool = False) -> ZetaEval:
    """Z(s, lam) of the spectrum, continued down to Re(s) >= 0.

    Adaptive in the level count (doubling, capped by K or 4096); the
    K -> infinity limit is accelerated over a ladder unless `accelerate` is
    off, in which case the raw partial at the largest K is returned and the
    first Euler-Maclaurin derivative correction only sizes the error bar.
    At a pole of the continuation, finite_part=True returns the
    pole-subtracted value lim (Z(s) - c/(s - s0)) instead of raising.
    """
    s = complex(s)
    lam = complex(lam)
    if s.real < -1e-12:
        raise UnsupportedOrderError("continuation implemented for Re(s) >= 0 only")
    if not finite_part:
        _check_pole(spec, s)
    if len(spec.energies) and np.min(spec.energies + lam.real) <= 0 and abs(lam.imag) < 1e-300:
        raise ValueError("lambda shifts a level onto the cut (E + lambda <= 0)")
    mu = spec.mu
    p = 1.0 + s.real / mu
    cap = min(K or 4096, 200000)
    m_top = 32
    prev = None
    result = err = None
    while True:
        m_top = min(m_top, cap)
        levels = spec.extended(m_top + 1)
        if accelerate and m_top >= 64 and p <= 3.5:
            result, err, raw = _ladder_extrapolate(
                lambda m: _eml_partial(spec, levels, m, s, lam, finite_part),
                m_top, p)
        else:
            result = _eml_partial(spec, levels, m_top, s, lam, finite_part)
            err = _b2_error(spec, levels, m_top, s, lam)
        done = m_top >= cap or (prev is not None and abs(result - prev) < tol)
        if done:
            break
        prev = result
        m_top *= 2
    if abs(s.imag) < 1e-300:
        result = complex(result.real)
    return ZetaEval(s=s, lam=lam, value=result, K_used=m_top,
                    tail_model={"exps": list(map(float, spec.bs_exps)) +
                                list(map(float, spec.fit_exps)),
                                "b0": spec.b0},
                    error_estimate=float(err))


def _b2_error(spec, levels, m, s, lam) -> float:
    EK = levels[m]
    dE = levels[m] - levels[m - 1] if m >= 1 else 1.0
    fp = abs(s) * abs(EK + lam) ** (-s.real - 1.0) * 2.0 * dE
    return fp / 12.0 + 1e-16 * m


def zprime0(spec: Spectrum, tol: float = 1e-9, h: float = 0.04) -> float:
    """Z'(0) by differentiating the continuation at s=0: complex step (no
    subtractive cancellation) with two Richardson passes in the step size."""
    def d(hh: float) -> float:
        z = zeta(spec, 1j * hh, 0.0, tol=tol * hh).value
        return z.imag / hh
    d1, d2, d4 = d(h), d(h / 2.0), d(h / 4.0)
    r1 = (4.0 * d2 - d1) / 3.0
    r2 = (4.0 * d4 - d2) / 3.0
    return float((16.0 * r2 - r1) / 15.0)


def determinant_spectral(spec: Spectrum, lam: complex, K: int | None = None,
                         tol: float = 1e-8) -> DeterminantValue:
    """Spectral determinant as a functional of the spectrum.

    Orders below one use the Euler-Maclaurin log-sum directly; orders in
    [1, 2) assemble exp[-Z'(0) + lam*Z~(1)] times the Weierstrass product.
    Negative levels (deep double wells) contribute their signs exactly.
    """
    lam = complex(lam)
    if spec.mu >= 1.0:
        if spec.mu >= 2.0:
            raise UnsupportedOrderError("determinant needs growth order < 2")
        zp = zprime0(spec, tol=tol)
        z1 = zeta(spec, 1.0, 0.0, tol=tol)
        delta = fredholm(spec, lam, K=K, tol=tol)
        logd = -zp + lam * z1.value + cmath.log(delta)
        val = cmath.exp(logd)
        return DeterminantValue(lam=lam, value=val, route="spectral",
                                error_estimate=max(tol, z1.error_estimate) * 10,
                                log_value=logd)
    mu = spec.mu
    cap = min(K or 4096, 200000)
    neg = int(np.sum(spec.energies + lam.real < 0)) if abs(lam.imag) < 1e-300 else 0
    if neg and np.any(np.abs(spec.energies + lam.real) < 1e-12):
        return DeterminantValue(lam=lam, value=0.0, route="spectral",
                                error_estimate=0.0, log_value=None)

    def partial(m: int) -> complex:
        E = levels[:m]
        EK = levels[m]
        terms = np.log(np.abs(E + lam.real) + 0j) if abs(lam.imag) < 1e-300 \
            else np.log(E + lam)
        ssum = np.sum(terms) + 0.5 * np.log(EK + lam)
        rs, bs = _tail_terms(spec)
        tail = 0.0 + 0j
        for r, b in zip(rs, bs):
            tail -= 0.5 * b * EK ** r * (np.log(EK) - 1.0 / r)
            if lam != 0:
                # log(1 + lam/E) expanded against the counting density
                tail += 0.5 * b * r * (lam * EK ** (r - 1) / (1.0 - r)
                                       - lam * lam * EK ** (r - 2) / (2.0 * (2.0 - r)))
        return complex(ssum + tail)

    m_top = 64
    prev = None
    while True:
        m_top = min(m_top, cap)
        levels = spec.extended(m_top + 1)
        logd, err, raw = _ladder_extrapolate(partial, m_top, 1.0)
        if m_top >= cap or (prev is not None and abs(logd - prev) < tol):
            break
        prev = logd
        m_top *= 2
    sign = -1.0 if neg % 2 else 1.0
    val = sign * cmath.exp(logd)
    if abs(lam.imag) < 1e-300:
        val = complex(val.real)
    return DeterminantValue(lam=lam, value=val, route="spectral",
                            error_estimate=float(err), log_value=logd)


def fredholm(spec: Spectrum, lam: complex, K: int | None = None,
             tol: float = 1e-9) -> complex:
    """Weierstrass product with the mu-appropriate convergence factors.

    For mu < 1 the plain product Prod (1 + lam/E_k); each extra unit of mu
    adds a factor exp[(-lam)^n / (n E_k^n)].  The remainder past the computed
    levels is summed through the zeta tails of the log expansion.
    """
    lam = complex(lam)
    nconv = int(math.floor(spec.mu))
    if spec.mu >= 2:
        raise UnsupportedOrderError("convergence factors implemented for mu < 2")
    cap = min(K or 4096, 200000)
    m = 128
    while True:
        m = min(m, cap)
        levels = spec.extended(m + 1)
        if levels[m] > 4.0 * abs(lam) + 10.0 or m >= cap:
            break
        m *= 2
    E = levels[:m]
    EK = levels[m]
    sign = 1.0
    fac = 1.0 + lam / E
    if abs(lam.imag) < 1e-300:
        neg = int(np.sum(fac.real < 0))
        sign = -1.0 if neg % 2 else 1.0
        logs = np.log(np.abs(fac) + 0j)
    else:
        logs = np.log(fac)
    if nconv >= 1:
        logs = logs - lam / E
    total = complex(np.sum(logs))
    # tail: sum_{j>nconv} (-1)^{j+1} lam^j / j * [zeta tail at s=j]
    x = abs(lam) / EK
    j = nconv + 1
    while j < 200:
        zt = _eml_partial(spec, levels, m, float(j), 0.0) - complex(
            np.sum(E ** (-float(j))))
        term = (-1) ** (j + 1) * lam ** j / j * zt
        total += term
        if abs(term) < 0.05 * tol and j > nconv + 2:
            break
        j += 1
    return sign * cmath.exp(total)


def extrapolate_levels(spec: Spectrum, fn, ratio: int = 2):
    """Richardson in the polished-level count: tail-model bias of quantities
    built on fitted pseudo-levels decays like 1/K, so evaluating `fn` on the
    spectrum and on its half-size subset removes the leading bias."""
    full = fn(spec)
    half = fn(spec.subset(len(spec.energies) // ratio))
    return (ratio * full - half) / (ratio - 1)


# -- scaling law -------------------------------------------------------------


def rescale_spectrum(spec: Spectrum, alpha: float) -> Spectrum:
    """Dilated spectrum {alpha E_k} with counting data transformed to match."""
    if alpha <= 0:
        raise ValueError("alpha must be > 0")
    cls = GeneralizedSpectrum if isinstance(spec, GeneralizedSpectrum) else Spectrum
    return cls(potential=spec.potential, parity=spec.parity, ks=spec.ks,
               energies=spec.energies * alpha, mu=spec.mu,
               bs_exps=spec.bs_exps,
               bs_vals=spec.bs_vals * alpha ** (-spec.bs_exps),
               b0=spec.b0, tol=spec.tol * alpha, family=spec.family,
               fit_exps=spec.fit_exps,
               fit_vals=spec.fit_vals * alpha ** (-spec.fit_exps),
               admissible=spec.admissible)


def rescale_zeta(z: ZetaEval, alpha: float) -> ZetaEval:
    """Map Z(s, lam) of a spectrum to Z(s, alpha*lam) of the dilated one."""
    if alpha <= 0:
        raise ValueError("alpha must be > 0")
    return ZetaEval(s=z.s, lam=alpha * z.lam,
                    value=alpha ** (-z.s) * z.value, K_used=z.K_used,
                    tail_model=z.tail_model,
                    error_estimate=z.error_estimate * alpha ** (-complex(z.s).real))


def rescale_determinant(d: DeterminantValue, alpha: float,
                        z0_at_lam: complex) -> DeterminantValue:
    """Map D(lam) to D(alpha*lam | alpha) = alpha^{Z(0, lam)} D(lam); the
    caller supplies Z(0, lam) from the leading trace identity."""
    if alpha <= 0:
        raise ValueError("alpha must be > 0")
    fac = alpha ** complex(z0_at_lam)
    return DeterminantValue(lam=alpha * d.lam, value=fac * d.value,
                            route=d.route,
                            error_estimate=d.error_estimate * abs(fac),
                            log_value=None if d.log_value is None
                            else d.log_value + complex(z0_at_lam) * math.log(alpha))


def rescaled_determinant_pair(p, lam: complex, alpha: float, base_pair) -> tuple[complex, complex]:
    """(D^+, D^-) of the dilated operator at spectral parameter lam, from the
    base pair evaluated at lam/alpha and the parity trace identities."""
    z0p, z0m = z0_pair(p, lam / alpha)
    return (alpha ** complex(z0p) * base_pair[0],
            alpha ** complex(z0m) * base_pair[1])


# -- closed form for Z(1) ----------------------------------------------------


def closed_zp1(N: int) -> tuple[float, float]:
    """(Z_N^P(1), Z_N(1)) in closed form via the Bessel-kernel integral.

    Z^P(1) = sin(nu pi)/(2 sqrt pi) (2nu)^{2-4nu} G(nu)G(2nu)G(3nu)/G(2nu+1/2)
    and Z(1) = tan(2 nu pi)/tan(nu pi) * Z^P(1); the prefactor has a pole at
    N = 2, where Z(1) itself diverges (order-one spectrum).
    """
    if N < 1:
        raise ValueError("N must be >= 1")
    nu = 1.0 / (N + 2)
    g = math.gamma
    zp1 = (math.sin(nu * math.pi) / (2.0 * math.sqrt(math.pi))
           * (2.0 * nu) ** (2.0 - 4.0 * nu)
           * g(nu) * g(2.0 * nu) * g(3.0 * nu) / g(2.0 * nu + 0.5))
    if N == 2:
        raise ZetaPoleError(1.0, 0.25)
    z1 = math.tan(2.0 * nu * math.pi) / math.tan(nu * math.pi) * zp1
    return zp1, z1
