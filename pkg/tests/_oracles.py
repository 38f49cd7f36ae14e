"""Independent numeric oracles used to freeze expected values in tests.

These deliberately avoid the package's own computational routes: eigenvalues
come from a finite-difference matrix with Richardson extrapolation, heat
coefficients from direct quadrature of the classical partition function, and
special values from quadrature of Bessel-kernel integrals.
"""
import math

import numpy as np
from scipy.integrate import quad


def fd_eigenvalues(coeffs: dict, parity: str, count: int, L: float = 12.0,
                   n: int = 3000) -> np.ndarray:
    """Half-line eigenvalues by a second-order finite-difference matrix with
    one h^2 Richardson pass; Neumann (+) or Dirichlet (-) wall at q=0."""
    def levels(nn: int) -> np.ndarray:
        h = L / nn
        if parity in ("+", "even"):
            q = np.arange(0, nn) * h
        else:
            q = np.arange(1, nn) * h
        V = np.zeros_like(q)
        for m, a in coeffs.items():
            V += a * q ** m
        main = 2.0 / h ** 2 + V
        A = np.diag(main) + np.diag(-np.ones(len(q) - 1) / h ** 2, 1) \
            + np.diag(-np.ones(len(q) - 1) / h ** 2, -1)
        if parity in ("+", "even"):
            A[0, 1] *= 2.0  # ghost point psi_{-1} = psi_{+1}
            w = np.sort(np.linalg.eigvals(A).real)
        else:
            w = np.linalg.eigvalsh(A)
        return np.sort(w)[:count]

    e1 = levels(n)
    e2 = levels(2 * n)
    return (4.0 * e2 - e1) / 3.0


def heat_trace_classical(coeffs: dict, t: float) -> float:
    """(pi t)^{-1/2} int_0^inf exp(-V(q) t) dq by quadrature."""
    def integrand(q):
        v = 0.0
        for m, a in coeffs.items():
            v += a * q ** m
        return math.exp(-v * t)

    hi = (50.0 / t) ** (1.0 / max(coeffs)) + 5.0
    val, _ = quad(integrand, 0.0, hi, limit=400)
    return val / math.sqrt(math.pi * t)


def skew_zeta1_quadrature(N: int, power: int = 1) -> float:
    """Bessel-kernel integral for the skew zeta value at s=1:
    (4 nu/pi) sin(nu pi) int K_nu(2 nu q^{1+N/2})^2 q^power dq.
    power=1 gives the half-line value, power=3 the generalized-spectrum one."""
    from scipy.special import kv
    nu = 1.0 / (N + 2)

    def f(q):
        return kv(nu, 2.0 * nu * q ** (1.0 + N / 2.0)) ** 2 * q ** power

    val, _ = quad(f, 0.0, np.inf, limit=300)
    return 4.0 * nu / math.pi * math.sin(nu * math.pi) * val
