"""Asymptotic (large-q) series on the half-integer exponent lattice.

A series sum_e c_e q^e is stored as a dict keyed by 2*e (an int), so both the
integer lattice of even-degree potentials and the half-integer lattice of odd
degrees live in one representation.  These series are asymptotic, typically
divergent; evaluation uses optimal truncation (stop at the smallest term) and
reports the stop term as the error estimate.
"""
from __future__ import annotations

import math

import numpy as np

Series = dict[int, complex]


def recessive_log_derivative(q_series: Series, emin2: int) -> tuple[Series, bool]:
    """Asymptotic series of w = -psi'/psi for psi'' = Q psi, psi recessive.

    Solves w^2 = Q + w' order by order: with doubled exponents k and the
    dense table w[i] for exponent n - i (n = deg/2 in doubled units),

        sum_{a+b=kk} w_a w_b = Q_kk + ((kk+2)/2) w_{kk+2}

    determines each coefficient from strictly higher ones in one pass.

    Returns (series, terminates): `terminates` flags a series whose dense
    table ends in a zero run much longer than its own exponent-lattice gap,
    i.e. an exactly terminating expansion (elementary recessive solution).
    """
    n2 = max(q_series)
    if n2 % 2:
        raise ValueError("leading exponent off the lattice")
    n = n2 // 2
    depth = n - emin2 + 1
    w = np.zeros(depth, dtype=complex)
    w[0] = 1.0  # monic leading term q^{N/2}
    for it in range(1, depth):
        kk = 2 * n - it           # doubled exponent of the w^2 relation
        rhs = complex(q_series.get(kk, 0.0))
        idx = it - n - 2          # w-index carrying the derivative term
        if 0 <= idx < depth:
            rhs += ((kk + 2) / 2.0) * w[idx]
        if it > 1:
            rhs -= np.dot(w[1:it], w[it - 1:0:-1])
        w[it] = rhs / (2.0 * w[0])
    nz = np.flatnonzero(w)
    gap = int(np.max(np.diff(nz))) if len(nz) > 1 else 1
    terminates = (depth - 1 - int(nz[-1])) >= 2 * gap + 4
    return ({n - int(i): complex(w[i]) for i in nz}, terminates)


def antiderivative(a: Series) -> tuple[Series, complex]:
    """Term-wise antiderivative; the q^{-1} term integrates to log q.

    Returns (power terms P with P' = a - c_{-1}/q, c_log = c_{-1}).
    """
    out: Series = {}
    c_log = 0.0 + 0j
    for e, c in a.items():
        if e == -2:
            c_log = c
        else:
            out[e + 2] = c / ((e + 2) / 2.0)
    return out, c_log


def eval_optimal(a: Series, q: float) -> tuple[complex, float]:
    """Evaluate at q summing to the globally smallest term.

    Returns (value, stop) where stop is the magnitude of the smallest term,
    the usual error estimate of an optimally truncated asymptotic series.
    """
    if not a:
        return 0.0 + 0j, 0.0
    items = sorted(a.items(), key=lambda t: -t[0])
    terms = [c * q ** (e / 2.0) for e, c in items]
    mags = [abs(t) for t in terms]
    imin = min(range(len(mags)), key=mags.__getitem__)
    tot = 0.0 + 0j
    for t in terms[: imin + 1]:
        tot += t
    return tot, mags[imin]


def eval_all(a: Series, q: float) -> complex:
    """Plain full sum (for series known to terminate exactly)."""
    return sum(c * q ** (e / 2.0) for e, c in a.items())


def log_eval(pterms: Series, c_log: complex, const: complex, q: float,
             exact: bool = False) -> tuple[complex, float]:
    """const - [P(q) + c_log log q] with optimal truncation of P."""
    if exact:
        return const - eval_all(pterms, q) - c_log * math.log(q), 0.0
    val, stop = eval_optimal(pterms, q)
    return const - val - c_log * math.log(q), stop
