# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled integrator core; behavioural twin of `_kernel_py.run`.

The integration itself runs without the GIL, so batch evaluations can be
driven from a thread pool.
"""

from . import _dop853 as _t

cdef extern from "complex.h":
    double cabs(double complex) nogil
    double creal(double complex) nogil
    double cimag(double complex) nogil

from libc.math cimport sqrt, hypot, log, isfinite, INFINITY, pow

cdef int NS = 12
cdef double A[13][12]
cdef double BC[12]
cdef double CC[13]
cdef double E3[13]
cdef double E5[13]

def _load_tableau():
    cdef int i, j
    for i in range(NS + 1):
        CC[i] = _t.C[i]
        E3[i] = _t.E3[i]
        E5[i] = _t.E5[i]
        for j in range(NS):
            A[i][j] = _t.A[i, j]
    for j in range(NS):
        BC[j] = _t.B[j]

_load_tableau()

OK = 0
STEP_LIMIT = 1
STEP_UNDERFLOW = 2
NOT_FINITE = 3

cdef double POLE_GUARD = 50.0
cdef double BIG = 1e120
DEF NCMAX = 80


cdef inline double complex _qval(double complex *crev, int nc, double q) nogil:
    cdef double complex s = 0.0
    cdef int i
    for i in range(nc):
        s = s * q + crev[i]
    return s

cdef inline bint _finite(double complex z) nogil:
    return isfinite(creal(z)) and isfinite(cimag(z))


cdef int _run_impl(double complex *crev, int nc, double complex w0,
                   double q0, double q_switch, double rtol, long max_steps,
                   double complex *out_y, double *out_sc, double *out_q,
                   long *out_n) nogil:
    """Fills out_y = [y1, y2, phi], out_sc = [logscale], out_q = [q_lin],
    out_n = [n_ric, n_lin]; returns a status code."""
    cdef double complex kw[13]
    cdef double complex kp[13]
    cdef double complex y1, y2, n1, n2, a1, a2, e5w, e5p, e3w, e3p, w, phi
    cdef double h, q, en, en2, d, fac, scw, scp, aq, m, wloc, sc1, sc2, qq
    cdef double logscale = 0.0
    cdef double q_lin = q_switch
    cdef long n_ric = 0, n_lin = 0, nfail = 0
    cdef int i, j
    cdef bint clamped, guard_trip = False

    w = w0
    phi = 0.0

    # ----- Riccati stage: y = (w, phi) -----
    if q0 > q_switch:
        q = q0
        y1 = w
        y2 = 0.0
        h = 0.2 * (q0 - q_switch)
        if 1.0 / (cabs(y1) + 1.0) < h:
            h = 1.0 / (cabs(y1) + 1.0)
        if 0.05 * (1.0 + q0) < h:
            h = 0.05 * (1.0 + q0)
        h = -h
        kw[0] = y1 * y1 - _qval(crev, nc, q)
        kp[0] = -y1
        while q > q_switch + 1e-14 * (1.0 + q0):
            clamped = False
            if q + h < q_switch:
                h = q_switch - q
                clamped = True
            for i in range(1, NS):
                a1 = y1
                a2 = y2
                for j in range(i):
                    if A[i][j] != 0.0:
                        a1 = a1 + h * A[i][j] * kw[j]
                        a2 = a2 + h * A[i][j] * kp[j]
                qq = q + CC[i] * h
                kw[i] = a1 * a1 - _qval(crev, nc, qq)
                kp[i] = -a1
            n1 = y1
            n2 = y2
            for j in range(NS):
                if BC[j] != 0.0:
                    n1 = n1 + h * BC[j] * kw[j]
                    n2 = n2 + h * BC[j] * kp[j]
            e5w = 0.0; e5p = 0.0; e3w = 0.0; e3p = 0.0
            for j in range(NS + 1):
                if E5[j] != 0.0:
                    e5w = e5w + E5[j] * kw[j]
                    e5p = e5p + E5[j] * kp[j]
                if E3[j] != 0.0:
                    e3w = e3w + E3[j] * kw[j]
                    e3p = e3p + E3[j] * kp[j]
            if _finite(n1) and _finite(e5w) and _finite(e3w):
                aq = cabs(_qval(crev, nc, q + h))
                scw = cabs(n1)
                if cabs(y1) > scw:
                    scw = cabs(y1)
                if 0.02 * (sqrt(aq) + 1.0) > scw:
                    scw = 0.02 * (sqrt(aq) + 1.0)
                scw = rtol * scw
                scp = 1.0
                if 0.2 * cabs(n2) > scp:
                    scp = 0.2 * cabs(n2)
                scp = rtol * scp
                d = hypot(cabs(e5w), 0.1 * cabs(e3w))
                en = (-h) * cabs(e5w) * cabs(e5w) / d / scw if d > 0.0 else 0.0
                d = hypot(cabs(e5p), 0.1 * cabs(e3p))
                en2 = (-h) * cabs(e5p) * cabs(e5p) / d / scp if d > 0.0 else 0.0
                if en2 > en:
                    en = en2
            else:
                en = INFINITY
            if en <= 1.0:
                q += h
                y1 = n1
                y2 = n2
                n_ric += 1
                kw[0] = y1 * y1 - _qval(crev, nc, q)
                kp[0] = -y1
                if cabs(y1) * cabs(y1) > POLE_GUARD * (cabs(_qval(crev, nc, q)) + 1.0):
                    q_lin = q
                    guard_trip = True
                    break
                if en == 0.0:
                    fac = 6.0
                else:
                    fac = 0.9 * pow(en, -0.125)
                    if fac > 6.0:
                        fac = 6.0
                    if fac < 0.33:
                        fac = 0.33
            else:
                nfail += 1
                if en == INFINITY:
                    fac = 0.25
                else:
                    fac = 0.9 * pow(en, -0.125)
                    if fac < 0.1:
                        fac = 0.1
            if n_ric + nfail > max_steps:
                out_y[0] = y1; out_y[1] = y2; out_y[2] = y2
                out_sc[0] = 0.0; out_q[0] = q
                out_n[0] = n_ric; out_n[1] = 0
                return STEP_LIMIT
            h *= fac
            if -h < 1e-13 * (1.0 + q) and not clamped:
                out_y[0] = y1; out_y[1] = y2; out_y[2] = y2
                out_sc[0] = 0.0; out_q[0] = q
                out_n[0] = n_ric; out_n[1] = 0
                return STEP_UNDERFLOW
        w = y1
        phi = y2
        if not guard_trip:
            q_lin = q_switch

    # ----- linear stage: y = (psi, psi') -----
    y1 = 1.0
    y2 = -w
    if q_lin > 0.0:
        q = q_lin
        h = 0.5 / (cabs(w) + 1.0)
        if 0.05 * q_lin + 1e-3 < h:
            h = 0.05 * q_lin + 1e-3
        h = -h
        kw[0] = y2
        kp[0] = _qval(crev, nc, q) * y1
        while q > 1e-300 and q > 1e-15 * q_lin:
            clamped = False
            if q + h < 0.0:
                h = -q
                clamped = True
            for i in range(1, NS):
                a1 = y1
                a2 = y2
                for j in range(i):
                    if A[i][j] != 0.0:
                        a1 = a1 + h * A[i][j] * kw[j]
                        a2 = a2 + h * A[i][j] * kp[j]
                qq = q + CC[i] * h
                kw[i] = a2
                kp[i] = _qval(crev, nc, qq) * a1
            n1 = y1
            n2 = y2
            for j in range(NS):
                if BC[j] != 0.0:
                    n1 = n1 + h * BC[j] * kw[j]
                    n2 = n2 + h * BC[j] * kp[j]
            e5w = 0.0; e5p = 0.0; e3w = 0.0; e3p = 0.0
            for j in range(NS + 1):
                if E5[j] != 0.0:
                    e5w = e5w + E5[j] * kw[j]
                    e5p = e5p + E5[j] * kp[j]
                if E3[j] != 0.0:
                    e3w = e3w + E3[j] * kw[j]
                    e3p = e3p + E3[j] * kp[j]
            if _finite(n1) and _finite(n2) and _finite(e5w):
                wloc = sqrt(cabs(_qval(crev, nc, q + 0.5 * h))) + 1.0
                m = cabs(n1)
                if cabs(y1) > m:
                    m = cabs(y1)
                if (cabs(n2) + cabs(y2)) / (2.0 * wloc) > m:
                    m = (cabs(n2) + cabs(y2)) / (2.0 * wloc)
                if m < 1e-6:
                    m = 1e-6
                sc1 = rtol * m
                sc2 = rtol * m * wloc
                d = hypot(cabs(e5w), 0.1 * cabs(e3w))
                en = (-h) * cabs(e5w) * cabs(e5w) / d / sc1 if d > 0.0 else 0.0
                d = hypot(cabs(e5p), 0.1 * cabs(e3p))
                en2 = (-h) * cabs(e5p) * cabs(e5p) / d / sc2 if d > 0.0 else 0.0
                if en2 > en:
                    en = en2
            else:
                en = INFINITY
            if en <= 1.0:
                q += h
                y1 = n1
                y2 = n2
                n_lin += 1
                m = cabs(y1)
                if cabs(y2) > m:
                    m = cabs(y2)
                if m > BIG or (m < 1.0 / BIG and m > 0.0):
                    y1 /= m
                    y2 /= m
                    logscale += log(m)
                kw[0] = y2
                kp[0] = _qval(crev, nc, q) * y1
                if en == 0.0:
                    fac = 6.0
                else:
                    fac = 0.9 * pow(en, -0.125)
                    if fac > 6.0:
                        fac = 6.0
                    if fac < 0.33:
                        fac = 0.33
            else:
                nfail += 1
                if en == INFINITY:
                    fac = 0.25
                else:
                    fac = 0.9 * pow(en, -0.125)
                    if fac < 0.1:
                        fac = 0.1
            if n_lin + n_ric + nfail > max_steps:
                out_y[0] = y1; out_y[1] = y2; out_y[2] = phi
                out_sc[0] = logscale; out_q[0] = q_lin
                out_n[0] = n_ric; out_n[1] = n_lin
                return STEP_LIMIT
            h *= fac
            if -h < 1e-15 * (1.0 + q) and not clamped:
                out_y[0] = y1; out_y[1] = y2; out_y[2] = phi
                out_sc[0] = logscale; out_q[0] = q_lin
                out_n[0] = n_ric; out_n[1] = n_lin
                return STEP_UNDERFLOW
    out_y[0] = y1; out_y[1] = y2; out_y[2] = phi
    out_sc[0] = logscale; out_q[0] = q_lin
    out_n[0] = n_ric; out_n[1] = n_lin
    if not (_finite(y1) and _finite(y2) and _finite(phi)):
        return NOT_FINITE
    return OK


def run(coefs, w0, double q0, double q_switch, double rtol,
        long max_steps=2_000_000):
    """See `_kernel_py.run` for the contract."""
    cdef double complex crev[NCMAX]
    cdef int nc = len(coefs)
    if nc > NCMAX:
        raise ValueError("polynomial degree too large for compiled core")
    cdef int i
    for i in range(nc):
        crev[i] = coefs[nc - 1 - i]
    cdef double complex w0c = w0
    cdef double complex out_y[3]
    cdef double out_sc[1]
    cdef double out_q[1]
    cdef long out_n[2]
    cdef int status
    with nogil:
        status = _run_impl(crev, nc, w0c, q0, q_switch, rtol, max_steps,
                           out_y, out_sc, out_q, out_n)
    return (status, complex(out_y[0]), complex(out_y[1]), out_sc[0],
            complex(out_y[2]), out_q[0], out_n[0], out_n[1])
