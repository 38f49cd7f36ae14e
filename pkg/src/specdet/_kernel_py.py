"""Pure-Python integrator backend for the recessive-solution engine.

Mirrors the compiled core in `_kernel_c.pyx`: an 8th-order Dormand-Prince
stepper driving (a) the Riccati variables (w, phi) with w = -psi'/psi and
phi = int -w dq through the non-oscillatory region, then (b) the rescaled
linear pair (psi, psi') down to q = 0.  Scalar complex arithmetic throughout;
state vectors are unrolled for speed.
"""
from __future__ import annotations

import math

from . import _dop853 as _t

NS = _t.N_STAGES  # 12

# tableau as nested tuples of (index, value) nonzeros
_A_NZ = tuple(
    tuple((j, float(_t.A[i, j])) for j in range(i) if _t.A[i, j] != 0.0)
    for i in range(NS)
)
_B_NZ = tuple((j, float(b)) for j, b in enumerate(_t.B) if b != 0.0)
_C = tuple(float(c) for c in _t.C)
_E3_NZ = tuple((j, float(e)) for j, e in enumerate(_t.E3) if e != 0.0)
_E5_NZ = tuple((j, float(e)) for j, e in enumerate(_t.E5) if e != 0.0)

OK = 0
STEP_LIMIT = 1
STEP_UNDERFLOW = 2
NOT_FINITE = 3

_POLE_GUARD = 50.0
_BIG = 1e120


def _isfinite(z: complex) -> bool:
    return math.isfinite(z.real) and math.isfinite(z.imag)


def run(coefs, w0, q0, q_switch, rtol, max_steps=2_000_000):
    """Integrate from q0 down to 0.

    coefs: dense Q(q) polynomial coefficients [lam, c_1, .., c_N].
    w0: log-derivative -psi'/psi at q0 (from the asymptotic series).
    q_switch: hand-over point to the linear formulation (0 disables).

    Returns (status, y1, y2, logscale, phi, q_lin, n_ric, n_lin) where
    psi(0) = y1 * exp(phi + T0 + logscale) for the caller's T0, and
    psi'(0) = y2 * exp(...) likewise.
    """
    crev = tuple(complex(c) for c in reversed(coefs))

    def Q(q):
        s = 0.0 + 0j
        for c in crev:
            s = s * q + c
        return s

    nfail = 0
    n_ric = n_lin = 0
    phi = 0.0 + 0j
    q_lin = q_switch
    w = complex(w0)
    status = OK

    # ----- Riccati stage -----
    if q0 > q_switch:
        q = q0
        y1, y2 = w, 0.0 + 0j  # (w, phi)
        h = -min(0.2 * (q0 - q_switch), 1.0 / (abs(w) + 1.0), 0.05 * (1.0 + q0))
        kw = [0j] * (NS + 1)
        kp = [0j] * (NS + 1)
        kw[0], kp[0] = y1 * y1 - Q(q), -y1
        while True:
            if q <= q_switch + 1e-14 * (1.0 + q0):
                break
            clamped = False
            if q + h < q_switch:
                h = q_switch - q
                clamped = True
            for i in range(1, NS):
                a1 = y1
                a2 = y2
                for j, a in _A_NZ[i]:
                    a1 += h * a * kw[j]
                    a2 += h * a * kp[j]
                qq = q + _C[i] * h
                kw[i] = a1 * a1 - Q(qq)
                kp[i] = -a1
            n1, n2 = y1, y2
            for j, b in _B_NZ:
                n1 += h * b * kw[j]
                n2 += h * b * kp[j]
            e5w = e5p = 0j
            for j, e in _E5_NZ:
                e5w += e * kw[j]
                e5p += e * kp[j]
            e3w = e3p = 0j
            for j, e in _E3_NZ:
                e3w += e * kw[j]
                e3p += e * kp[j]
            if _isfinite(n1) and _isfinite(e5w) and _isfinite(e3w):
                aq = abs(Q(q + h))
                scw = rtol * max(abs(n1), abs(y1), 0.02 * (math.sqrt(aq) + 1.0))
                scp = rtol * max(1.0, 0.2 * abs(n2))
                d = math.hypot(abs(e5w), 0.1 * abs(e3w))
                en = (abs(h) * abs(e5w) ** 2 / d / scw) if d > 0 else 0.0
                d = math.hypot(abs(e5p), 0.1 * abs(e3p))
                en2 = (abs(h) * abs(e5p) ** 2 / d / scp) if d > 0 else 0.0
                if en2 > en:
                    en = en2
            else:
                en = math.inf
            if en <= 1.0:
                q += h
                y1, y2 = n1, n2
                n_ric += 1
                kw[0], kp[0] = y1 * y1 - Q(q), -y1
                if abs(y1) ** 2 > _POLE_GUARD * (abs(Q(q)) + 1.0):
                    q_lin = q  # log-derivative blowing up: hand over early
                    break
                fac = 6.0 if en == 0.0 else min(6.0, max(0.33, 0.9 * en ** -0.125))
            else:
                nfail += 1
                fac = 0.25 if en is math.inf else max(0.1, 0.9 * en ** -0.125)
            if n_ric + nfail > max_steps:
                return (STEP_LIMIT, y1, y2, 0.0, y2, q, n_ric, 0)
            h *= fac
            if abs(h) < 1e-13 * (1.0 + abs(q)) and not clamped:
                return (STEP_UNDERFLOW, y1, y2, 0.0, y2, q, n_ric, 0)
        w = y1
        phi = y2
        if q_lin > q_switch:
            pass  # early hand-over; fall through with q_lin set
        else:
            q_lin = q_switch

    # ----- linear stage -----
    logscale = 0.0
    y1, y2 = 1.0 + 0j, -w
    if q_lin > 0.0:
        q = q_lin
        h = -min(0.5 / (abs(w) + 1.0), 0.05 * q_lin + 1e-3)
        k1 = [0j] * (NS + 1)
        k2 = [0j] * (NS + 1)
        k1[0], k2[0] = y2, Q(q) * y1
        while True:
            if q <= 1e-300 or q <= 1e-15 * q_lin:
                break
            clamped = False
            if q + h < 0.0:
                h = -q
                clamped = True
            for i in range(1, NS):
                a1 = y1
                a2 = y2
                for j, a in _A_NZ[i]:
                    a1 += h * a * k1[j]
                    a2 += h * a * k2[j]
                qq = q + _C[i] * h
                k1[i] = a2
                k2[i] = Q(qq) * a1
            n1, n2 = y1, y2
            for j, b in _B_NZ:
                n1 += h * b * k1[j]
                n2 += h * b * k2[j]
            e51 = e52 = 0j
            for j, e in _E5_NZ:
                e51 += e * k1[j]
                e52 += e * k2[j]
            e31 = e32 = 0j
            for j, e in _E3_NZ:
                e31 += e * k1[j]
                e32 += e * k2[j]
            if _isfinite(n1) and _isfinite(n2) and _isfinite(e51):
                wloc = math.sqrt(abs(Q(q + 0.5 * h))) + 1.0
                m = max(abs(n1), abs(y1), (abs(n2) + abs(y2)) / (2 * wloc), 1e-6)
                sc1 = rtol * m
                sc2 = rtol * m * wloc
                d = math.hypot(abs(e51), 0.1 * abs(e31))
                en = (abs(h) * abs(e51) ** 2 / d / sc1) if d > 0 else 0.0
                d = math.hypot(abs(e52), 0.1 * abs(e32))
                en2 = (abs(h) * abs(e52) ** 2 / d / sc2) if d > 0 else 0.0
                if en2 > en:
                    en = en2
            else:
                en = math.inf
            if en <= 1.0:
                q += h
                y1, y2 = n1, n2
                n_lin += 1
                m = max(abs(y1), abs(y2))
                if m > _BIG or (m < 1.0 / _BIG and m > 0.0):
                    y1 /= m
                    y2 /= m
                    logscale += math.log(m)
                k1[0], k2[0] = y2, Q(q) * y1
                fac = 6.0 if en == 0.0 else min(6.0, max(0.33, 0.9 * en ** -0.125))
            else:
                nfail += 1
                fac = 0.25 if en is math.inf else max(0.1, 0.9 * en ** -0.125)
            if n_lin + n_ric + nfail > max_steps:
                return (STEP_LIMIT, y1, y2, logscale, phi, q_lin, n_ric, n_lin)
            h *= fac
            if abs(h) < 1e-15 * (1.0 + abs(q)) and not clamped:
                return (STEP_UNDERFLOW, y1, y2, logscale, phi, q_lin, n_ric, n_lin)
    if not (_isfinite(y1) and _isfinite(y2) and _isfinite(phi)):
        status = NOT_FINITE
    return (status, y1, y2, logscale, phi, q_lin, n_ric, n_lin)
