"""Canonical recessive solution and the determinant pair it carries.

For -psi'' + (V + lam) psi = 0 the unique solution decaying as q -> +inf with
the renormalized-WKB normalization gives both half-line determinants at once:
D^-(lam) = psi(0) under Dirichlet, D^+(lam) = -psi'(0) under Neumann.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .engine import RawSolution, make_plan, solve_plan
from .potential import PolynomialPotential


@dataclass(frozen=True)
class RecessiveResult:
    psi0: complex
    dpsi0: complex
    q_start: float
    step_stats: dict
    error_estimate: float
    raw: RawSolution


@dataclass(frozen=True)
class DeterminantPair:
    """D^+ = -psi'(0) and D^- = psi(0), stored as mantissa * exp(log_scale)
    so rotated-argument evaluations with large exponential envelopes never
    overflow."""

    dplus_mantissa: complex
    dminus_mantissa: complex
    log_scale: float
    error_estimate: float

    @property
    def dplus(self) -> complex:
        return self.dplus_mantissa * math.exp(self.log_scale)

    @property
    def dminus(self) -> complex:
        return self.dminus_mantissa * math.exp(self.log_scale)

    @property
    def d(self) -> complex:
        """Whole-line determinant D = D^+ D^-."""
        return (self.dplus_mantissa * self.dminus_mantissa
                * math.exp(2.0 * self.log_scale))

    def pick(self, parity: str) -> complex:
        return self.dplus if parity in ("+", "even") else self.dminus


def solve_recessive(p: PolynomialPotential, lam: complex, tol: float = 1e-10,
                    _check: bool = True) -> RecessiveResult:
    """Integrate the recessive solution inward to q=0.

    tol controls the integrator; the reported error estimate comes from a
    second run at a coarser tolerance (step-halving style comparison), plus
    the asymptotic-matching residual.
    """
    if not 1e-13 <= tol <= 1e-5:
        raise ValueError("tol outside supported range [1e-13, 1e-5]")
    rtol = max(tol / 20.0, 1e-13)
    sol = solve_plan(make_plan(p, lam, rtol))
    err = sol.error_estimate
    if _check:
        ref = solve_plan(make_plan(p, lam, min(rtol * 50.0, 1e-7)))
        num = abs(sol.psi_mantissa - ref.psi_mantissa * math.exp(ref.log_scale - sol.log_scale))
        den = max(abs(sol.psi_mantissa), 1e-300)
        err = max(err, num / den)
    stats = {"n_riccati": sol.n_riccati, "n_linear": sol.n_linear,
             "q_linear": sol.q_linear}
    return RecessiveResult(psi0=sol.psi0, dpsi0=sol.dpsi0, q_start=sol.q_start,
                           step_stats=stats, error_estimate=err, raw=sol)


def determinant_pair(p: PolynomialPotential, lam: complex,
                     rtol: float = 1e-12) -> DeterminantPair:
    """Both half-line determinants at spectral parameter lam (one solve)."""
    sol = solve_plan(make_plan(p, lam, rtol))
    return DeterminantPair(dplus_mantissa=-sol.dpsi_mantissa,
                           dminus_mantissa=sol.psi_mantissa,
                           log_scale=sol.log_scale,
                           error_estimate=sol.error_estimate)
