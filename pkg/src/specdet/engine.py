"""Recessive-solution engine: plans a solve (asymptotic matching point,
oscillation hand-over, series initial data) and drives an integrator backend.

The canonical recessive solution is normalized through its large-q form
psi ~ e^C q^{-N/4 - beta_{-1}(0)} e^{-S_lam(q)}; the planner realizes this by
evaluating the full asymptotic series of log psi at the matching point Q0
(optimal truncation), so the only tunable is where the series is trusted.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from . import series
from .backend import get_backend
from .potential import PolynomialPotential, recessive_constant


class EngineError(RuntimeError):
    pass


class NormalizationError(EngineError):
    """Raised when no series-valid matching point exists at the tolerance."""


@dataclass(frozen=True)
class SolvePlan:
    coefs: tuple[complex, ...]       # Q(q) = sum coefs[m] q^m, coefs[0] = lam
    q0: float
    q_switch: float
    w0: complex
    T0: complex                      # log psi(q0) from the series
    series_err: float                # optimal-truncation stop term at q0
    rtol: float


@dataclass(frozen=True)
class RawSolution:
    psi_mantissa: complex
    dpsi_mantissa: complex
    log_scale: float                 # psi(0) = psi_mantissa * exp(log_scale)
    error_estimate: float
    q_start: float
    q_linear: float
    n_riccati: int
    n_linear: int

    @property
    def psi0(self) -> complex:
        return self.psi_mantissa * math.exp(self.log_scale)

    @property
    def dpsi0(self) -> complex:
        return self.dpsi_mantissa * math.exp(self.log_scale)

    def log_psi0(self) -> complex:
        return cmath.log(self.psi_mantissa) + self.log_scale

    def log_dpsi0(self) -> complex:
        return cmath.log(self.dpsi_mantissa) + self.log_scale


def _scale_radius(p: PolynomialPotential, lam: complex) -> float:
    r = 1.0
    n = p.degree
    for m, a in p.coeffs.items():
        if a:
            r = max(r, abs(a) ** (1.0 / (n - m)))
    return max(r, abs(lam) ** (1.0 / n))


def make_plan(p: PolynomialPotential, lam: complex, rtol: float,
              q0_floor: float = 0.0) -> SolvePlan:
    """Assemble series data, matching point and hand-over point."""
    n = p.degree
    lam = complex(lam)
    q_ref = _scale_radius(p, lam)
    depth2 = min(2 * n + 44, 120)
    emin2 = n - 2 * depth2
    qser: series.Series = {2 * m: complex(a) for m, a in p.coeffs.items()}
    qser[2 * n] = 1.0 + 0j
    if lam != 0:
        qser[0] = qser.get(0, 0.0) + lam
    # an exactly terminating series marks an elementary recessive solution
    # (e.g. harmonic eigenvalues); any oscillation-free matching point works
    w, exact_series = series.recessive_log_derivative(qser, emin2)
    pterms, c_log = series.antiderivative(w)
    c_const = recessive_constant(p, lam)

    # oscillation hand-over: largest q where Q(q) leaves the right half cone
    dense = p.dense_coeffs(lam)
    coefs = tuple(complex(c) for c in dense)
    grid = np.geomspace(2.2 * q_ref, 1e-3, 320)
    z = np.polyval(dense[::-1], grid)
    bad = z.real < 0.6 * np.abs(z)
    q_switch = 0.0
    if bad.any():
        qq = float(grid[int(np.argmax(bad))])
        q_switch = 1.2 * qq + 0.25

    # matching point: smallest q where optimal truncation of the normalization
    # integral is below budget (any q clear of the oscillation region works
    # when the series terminates exactly)
    target = 0.05 * rtol
    q0 = max(1.6 * q_ref, 1.1 * q_switch + 0.3, q0_floor)
    if not exact_series:
        ok = False
        for _ in range(300):
            _, stop_p = series.eval_optimal(pterms, q0)
            wval, stop_w = series.eval_optimal(w, q0)
            if stop_p < target and stop_w < target * max(1.0, abs(wval)):
                ok = True
                break
            q0 *= 1.18
        if not ok:
            raise NormalizationError(
                f"no series-valid matching point below q={q0:.3g} at rtol={rtol:g}")

    T0, stop_p = series.log_eval(pterms, c_log, c_const, q0, exact=exact_series)
    w0 = series.eval_all(w, q0) if exact_series else series.eval_optimal(w, q0)[0]
    return SolvePlan(coefs=coefs, q0=q0, q_switch=q_switch, w0=w0, T0=T0,
                     series_err=stop_p, rtol=rtol)


def solve_plan(plan: SolvePlan) -> RawSolution:
    """Run the integrator backend over a plan and assemble the solution."""
    kern = get_backend()
    status, y1, y2, logscale, phi, q_lin, n_ric, n_lin = kern.run(
        plan.coefs, plan.w0, plan.q0, plan.q_switch, plan.rtol)
    if status == 1:
        raise EngineError("integrator step limit exceeded")
    if status == 2:
        raise EngineError("integrator step size underflow")
    if status == 3:
        raise EngineError("integrator produced non-finite values "
                          "(spectral parameter outside the recessive sector?)")
    T = plan.T0 + phi
    rot = cmath.exp(1j * T.imag)
    err = plan.series_err + 30.0 * plan.rtol
    return RawSolution(psi_mantissa=y1 * rot, dpsi_mantissa=y2 * rot,
                       log_scale=T.real + logscale, error_estimate=err,
                       q_start=plan.q0, q_linear=q_lin,
                       n_riccati=n_ric, n_linear=n_lin)


def solve(p: PolynomialPotential, lam: complex, rtol: float = 1e-12,
          q0_floor: float = 0.0) -> RawSolution:
    return solve_plan(make_plan(p, lam, rtol, q0_floor=q0_floor))
