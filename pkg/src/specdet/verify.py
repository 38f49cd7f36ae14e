"""Identity-verification suites: every functional relation, exact
quantization condition, sum rule and limit trend is checked by computing its
two sides through disjoint code paths and reporting the worst residual.

Tolerance taxonomy: closed form vs closed form 1e-12; closed form vs ODE
route 1e-8; anything through Euler-Maclaurin spectral sums 1e-6 (or looser
where the reference itself is approximate).  Sample sets are deterministic:
fixed grids plus eight seeded pseudo-random complex points per identity.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from . import closedform as cf
from . import specfun
from .potential import (PolynomialPotential, beta_expansion, bs_coefficients,
                        conjugate, heat_coefficients)
from .qi import (J, qi_asymptotic, qi_eval, qi_exact_quantization,
                 qi_sum_rules, qi_zero_zeta)
from .recessive import determinant_pair
from .spectrum import GeneralizedSpectrum, Spectrum, eigenvalues, generalized_zeros
from .zetadet import (closed_zp1, determinant_spectral, extrapolate_levels,
                      fredholm, zeta, zprime0)

_SEED = 20240817


@dataclass(frozen=True)
class VerificationReport:
    identity: str
    samples: str
    max_residual: float
    tolerance: float
    passed: bool
    details: dict = field(default_factory=dict)

    @staticmethod
    def build(identity: str, samples: str, residual: float, tol: float,
              details: dict | None = None) -> "VerificationReport":
        residual = float(residual)
        return VerificationReport(identity, samples, residual, tol,
                                  residual < tol, details or {})

    def to_json_dict(self) -> dict:
        return {"identity": self.identity, "samples": self.samples,
                "max_residual": self.max_residual, "tolerance": self.tolerance,
                "passed": self.passed}


def _rng_points(n: int = 8, radius: float = 2.5, arg_max: float = 2.0) -> list[complex]:
    rng = np.random.default_rng(_SEED)
    r = radius * rng.random(n) + 0.2
    th = arg_max * (2.0 * rng.random(n) - 1.0)
    return [complex(rr * math.cos(tt), rr * math.sin(tt)) for rr, tt in zip(r, th)]


_SPECTRA: dict = {}


def _spectrum(p: PolynomialPotential, parity: str, K: int, tol: float = 1e-11) -> Spectrum:
    key = (p.to_text(), parity, K, tol)
    if key not in _SPECTRA:
        _SPECTRA[key] = eigenvalues(p, parity, K, tol=tol)
    return _SPECTRA[key]


_ZEROS: dict = {}


def _zeros(family, K: int, tol: float = 1e-10) -> GeneralizedSpectrum:
    key = (tuple(family), K, tol)
    if key not in _ZEROS:
        _ZEROS[key] = generalized_zeros(family, K, tol=tol)
    return _ZEROS[key]


# -- bilinear (Wronskian-type) relation ---------------------------------------


def check_wronskian(p: PolynomialPotential, lambda_samples=None,
                    tol: float = 1e-6) -> VerificationReport:
    """Residual of the bilinear relation between the determinants of the base
    potential and of its first conjugate at the rotated spectral parameter;
    the right-hand side is 2i times the residue phase."""
    phi = p.phi
    rot_pot, rot_lam = conjugate(p, 1)
    b0 = beta_expansion(p, 0.0).beta_minus1(0.0)
    if lambda_samples is None:
        lambda_samples = [0.0, 1.0, -1.0, 2.0j] + _rng_points(8, 2.0, 0.9)
    worst = 0.0
    for lam in lambda_samples:
        d0 = determinant_pair(p, lam)
        d1 = determinant_pair(rot_pot, rot_lam * lam)
        lhs = (cmath.exp(1j * phi / 4.0) * d1.dplus * d0.dminus
               - cmath.exp(-1j * phi / 4.0) * d0.dplus * d1.dminus)
        rhs = 2j * cmath.exp(1j * phi * b0 / 2.0)
        worst = max(worst, abs(lhs - rhs) / abs(rhs))
    return VerificationReport.build(
        f"bilinear-relation[{p.to_text()}]",
        f"{len(lambda_samples)} spectral points", worst, tol)


# -- exact quantization --------------------------------------------------------


def _arg_trace_lambda(pot_for_det: PolynomialPotential, rot: complex,
                      targets: np.ndarray, parity: str, rate, rtol=1e-11) -> np.ndarray:
    """Unwrapped arg of D^parity(-rot*E) along E >= 0 at the target E's."""
    pol = 0 if parity in ("+", "even") else 1
    targets = np.asarray(targets, dtype=float)
    order = np.argsort(targets)
    ts = targets[order]
    out = np.empty_like(ts)
    x = 0.0
    prev = None
    total = 0.0
    n_eval = 0

    def f(E: float) -> complex:
        d = determinant_pair(pot_for_det, -rot * E, rtol=rtol)
        return d.dplus_mantissa if pol == 0 else d.dminus_mantissa

    prev = f(0.0)
    total = cmath.phase(prev)
    for i, t in enumerate(ts):
        while x < t:
            step = min(0.5, math.pi / (2.5 * max(rate(x), 0.25)), t - x)
            x += step
            cur = f(x)
            total += cmath.phase(cur / prev)
            prev = cur
            n_eval += 1
            if n_eval > 200000:
                raise RuntimeError("phase-trace step limit")
        out[i] = total
    res = np.empty_like(out)
    res[order] = out
    return res


def check_exact_quantization(p: PolynomialPotential, K: int = 11,
                             tol: float = 1e-6) -> VerificationReport:
    """At each eigenvalue E_k, (2/pi) arg D^{[1]+-}(-e^{-i phi} E_k) minus the
    residue shift must equal k + 1/2 +- (N-2)/(2(N+2))."""
    n = p.degree
    if n == 2:
        raise ValueError("the rotated-argument condition excludes N=2")
    phi = p.phi
    rot_pot, rot_lam = conjugate(p, 1)
    b0 = complex(beta_expansion(p, 0.0).beta_minus1(0.0)).real
    heat = heat_coefficients(p)
    bcoef = bs_coefficients(heat)
    bmu = [b.b_plus for b in bcoef if b.rho < 0]
    mu = float(p.growth_order)
    rate = lambda E: 2.5 * max(sum(bmu) * mu * max(E, 0.2) ** (mu - 1.0), 0.2)
    worst = 0.0
    for parity in ("+", "-"):
        spec = _spectrum(p, parity, K // 2 + 1)
        ks = spec.ks
        args = _arg_trace_lambda(rot_pot, rot_lam, spec.energies, parity, rate)
        lhs = 2.0 / math.pi * args - (phi / math.pi) * b0
        off = (n - 2) / (2.0 * (n + 2))
        target = ks + 0.5 + (off if parity == "+" else -off)
        worst = max(worst, float(np.max(np.abs(lhs - target))))
    return VerificationReport.build(
        f"exact-quantization[{p.to_text()}]", f"k <= {K}", worst, tol)


# -- cocycle identities --------------------------------------------------------


def check_cocycle(N: int, lambda_samples=None, tol: float = 1e-6) -> VerificationReport:
    """Closed functional equation for the whole-line determinant under the
    one-third rotations: product form for the quartic, quadratic form for the
    linear potential."""
    if N not in (1, 4):
        raise ValueError("cocycle checks implemented for N in {1, 4}")
    p = PolynomialPotential(N)
    if lambda_samples is None:
        lambda_samples = [0.0, 0.7, -1.3, 1.1j] + _rng_points(8, 1.8, math.pi - 0.2)
    worst = 0.0
    for lam in lambda_samples:
        ds = []
        for ell in range(3):
            d = determinant_pair(p, (J ** ell) * lam)
            ds.append(d.d)
        a, b, c = ds
        if N == 4:
            resid = a * b * c - (a + b + c + 2.0)
        else:
            resid = (a * a + b * b + c * c
                     - 2.0 * (a * b + b * c + c * a) + 4.0)
        worst = max(worst, abs(resid))
    return VerificationReport.build(
        f"cocycle[N={N}]", f"{len(lambda_samples)} spectral points", worst, tol)


# -- sum rules ------------------------------------------------------------------


def check_sum_rules(which: str = "all", n_max: int = 3,
                    tol: float = 1e-6) -> list[VerificationReport]:
    """Sum-rule residuals for the quartic, Airy, harmonic, quartic-well-zero
    and square-well spectra; spectral inputs come from Euler-Maclaurin values
    over computed spectra, reference sides from closed forms."""
    reports = []
    tau = 3.0 ** (1 / 3) * math.gamma(2 / 3) / math.gamma(1 / 3)

    if which in ("all", "quartic"):
        p4 = PolynomialPotential(4)
        zp = {n: zeta(_spectrum(p4, "+", 80), float(n), tol=1e-11).value.real
              for n in range(1, n_max + 1)}
        zm = {n: zeta(_spectrum(p4, "-", 80), float(n), tol=1e-11).value.real
              for n in range(1, n_max + 1)}
        r = [abs(zp[1] - 2.0 * zm[1])]
        if n_max >= 2:
            r.append(abs(2.0 * zp[2] - zm[2] - 3.0 * (zp[1] - zm[1]) ** 2))
        if n_max >= 3:
            z1, z2, z3 = (zp[1] + zm[1]), (zp[2] + zm[2]), (zp[3] + zm[3])
            r.append(abs(z3 - (z1 ** 3 / 6.0 - z1 * z2 / 2.0)))
        zp1c, z1c = closed_zp1(4)
        r.append(abs((zp[1] - zm[1]) - zp1c))
        r.append(abs((zp[1] + zm[1]) - z1c))
        reports.append(VerificationReport.build(
            "sum-rules[quartic]", f"orders 1..{n_max} + closed s=1", max(r), tol,
            {"zeta_plus": zp, "zeta_minus": zm}))

    if which in ("all", "airy"):
        p1 = PolynomialPotential(1)
        zp = {n: zeta(_spectrum(p1, "+", 60), float(n), tol=1e-11).value.real
              for n in range(1, n_max + 1)}
        zm = {n: zeta(_spectrum(p1, "-", 60), float(n), tol=1e-11).value.real
              for n in range(1, n_max + 1)}
        # tau-rational references
        refs = {("+", 1): 0.0, ("-", 1): -tau, ("+", 2): 1.0 / tau,
                ("-", 2): tau * tau, ("+", 3): 1.0, ("-", 3): 0.5 - tau ** 3}
        r = [abs(zp[1])]
        if n_max >= 2:
            r.append(abs(zm[2] - zm[1] ** 2))
        if n_max >= 3:
            z1, z2, z3 = (zp[1] + zm[1]), (zp[2] + zm[2]), (zp[3] + zm[3])
            r.append(abs(z3 - (2.5 * z1 ** 3 - 1.5 * z1 * z2)))
        for (par, n), ref in refs.items():
            if n <= n_max:
                r.append(abs((zp if par == "+" else zm)[n] - ref))
        reports.append(VerificationReport.build(
            "sum-rules[airy]", f"orders 1..{n_max} vs tau-rationals", max(r), tol,
            {"zeta_plus": zp, "zeta_minus": zm}))

    if which in ("all", "harmonic"):
        p2 = PolynomialPotential(2)
        sp = _spectrum(p2, "+", 60)
        sm = _spectrum(p2, "-", 60)
        r = []
        # the order-one pole cancels between parities; compare finite parts
        zp1 = zeta(sp, 1.0, tol=1e-11, finite_part=True).value.real
        zm1 = zeta(sm, 1.0, tol=1e-11, finite_part=True).value.real
        r.append(abs((zp1 - zm1) - math.pi / 4.0))
        r.append(abs((zp1 - zm1) - specfun.dirichlet_beta(1.0)))
        if n_max >= 2:
            z2v = (zeta(sp, 2.0, tol=1e-11).value.real
                   + zeta(sm, 2.0, tol=1e-11).value.real)
            r.append(abs(z2v - math.pi ** 2 / 8.0))
            r.append(abs(z2v - (1 - 2.0 ** -2) * specfun.riemann_zeta(2.0)))
        if n_max >= 3:
            zp3 = zeta(sp, 3.0, tol=1e-11).value.real
            zm3 = zeta(sm, 3.0, tol=1e-11).value.real
            r.append(abs((zp3 - zm3) - math.pi ** 3 / 32.0))
        reports.append(VerificationReport.build(
            "sum-rules[harmonic]", f"orders 1..{n_max} vs pi-values", max(r), tol))

    if which in ("all", "qi-zeros"):
        zf = qi_zero_zeta(n_max=max(3, n_max), K=64)
        rules = qi_sum_rules(zf)
        r1 = abs(rules["rule1"])
        r_loose = max(abs(rules.get("rule2", 0.0)), abs(rules.get("rule3", 0.0)))
        ok = (r1 < tol and abs(rules["skew-vs-closed"]) < tol
              and abs(rules["taylor-n1"]) < 1e-5 and r_loose < 1e-3)
        reports.append(VerificationReport(
            "sum-rules[qi-zeros]", "orders 1..3 (2,3 limited by zero count)",
            max(r1, abs(rules["skew-vs-closed"])), tol, ok,
            {k: float(v) for k, v in rules.items()}))

    if which in ("all", "square-well"):
        # generating identity orders 1..3: 2 Z^P(n) = [x^n] (exp(sum Z(m)/m x^m) - 1)
        zs = {m: cf.square_well("zeta", m) for m in range(1, 4)}
        zps = {m: cf.square_well("zeta_plus", m) - cf.square_well("zeta_minus", m)
               for m in range(1, 4)}
        import numpy.polynomial.polynomial as P
        a = np.zeros(4)
        for m in range(1, 4):
            a[m] = zs[m] / m
        expm = np.array([1.0, 0, 0, 0])
        term = np.array([1.0, 0, 0, 0])
        for k in range(1, 6):
            term = P.polymul(term, a)[:4] / k
            expm = P.polyadd(expm, term)[:4]
        r = [abs(2.0 * zps[m] - expm[m]) for m in range(1, 4)]
        reports.append(VerificationReport.build(
            "sum-rules[square-well]", "generating identity orders 1..3",
            max(r), 1e-10))
    return reports


# -- square well: identities and the large-N limit ------------------------------


def check_square_well_identities(tol: float = 1e-10) -> list[VerificationReport]:
    """Closed-form square-well checks: the classical-Wronskian relation among
    the Fredholm pair, and the sign constraint at the zeros (both sides
    analytic, so the residuals sit at roundoff)."""
    lam = np.linspace(-20.0, 5.0, 41)
    lam = lam[np.abs(lam) > 1e-9]
    resid = []
    for x in lam:
        r = cmath.sqrt(complex(-x))
        dp = cmath.cos(r)
        dm = cmath.sin(r) / r
        # lam * d/dlam with lam = -r^2
        lam_ddp = -r * cmath.sin(r) / 2.0
        lam_ddm = (r * cmath.cos(r) - cmath.sin(r)) / (2.0 * r)
        resid.append(abs(dp * lam_ddm - lam_ddp * dm - 0.5 * (1.0 - dp * dm)))
    r1 = VerificationReport.build("square-well-wronskian",
                                  f"{len(lam)} real spectral points",
                                  max(resid), tol)
    # -2 [lam dDelta/dlam] at lam = -E_k equals (-1)^k
    resid2 = []
    for k in range(21):
        E = (k + 1) ** 2 * math.pi ** 2 / 4.0
        r = math.sqrt(E)
        ddelta = -(2.0 * r * math.cos(2.0 * r) - math.sin(2.0 * r)) / (4.0 * r ** 3)
        resid2.append(abs(-2.0 * (-E) * ddelta - (-1.0) ** k))
    r2 = VerificationReport.build("square-well-zero-signs", "k <= 20",
                                  max(resid2), tol)
    return [r1, r2]


def check_square_well_limit(N_list=(4, 8, 16, 32, 64),
                            fredholm_N: int = 16) -> list[VerificationReport]:
    """Large-degree trends toward the square well: determinant and zeta
    values must approach the limit monotonically, the skew values are exact
    at every degree, and the Fredholm determinant of a moderate degree is
    already close to the limit curve."""
    reports = []
    dplus_gap, z1p_gap, z1m_gap, dp_gap = [], [], [], []
    for n in N_list:
        dp_, dm_, _ = cf.homogeneous_d0(n)
        dplus_gap.append(abs(dp_ * math.sqrt(math.pi / n) - 1.0))
        zp1, z1 = closed_zp1(n)
        z1p_gap.append(abs((z1 + zp1) / 2.0 - 0.5))
        z1m_gap.append(abs((z1 - zp1) / 2.0 - 1.0 / 6.0))
        dp_gap.append(abs(dp_ / dm_ - 1.0))
    # D(0) sqrt(pi/N) crosses 1 between N=4 and 8, so the gap is compared
    # against the N=16 rung rather than required monotone from the start
    mono = all(np.diff(z1p_gap) < 0) and all(np.diff(z1m_gap) < 0) \
        and all(np.diff(dp_gap) < 0) and dplus_gap[-1] < dplus_gap[2] \
        and dplus_gap[-1] < 0.1
    reports.append(VerificationReport(
        "square-well-limit[trends]", f"N in {list(N_list)}",
        float(dplus_gap[-1]), 0.1, bool(mono),
        {"dplus_scaled_gap": dplus_gap, "z1_plus_gap": z1p_gap,
         "z1_minus_gap": z1m_gap, "skew_det_gap": dp_gap}))
    # skew regularity: Z_N^P(0) = 1/2 exactly from the counting data
    r = []
    for n in N_list:
        heat = heat_coefficients(PolynomialPotential(n))
        z0p = [h.c_plus for h in heat if h.rho == 0][0]
        z0m = [h.c_minus for h in heat if h.rho == 0][0]
        r.append(abs((z0p - z0m) - 0.5))
    reports.append(VerificationReport.build(
        "square-well-limit[skew-trace]", f"N in {list(N_list)}", max(r), 1e-14))
    # Fredholm determinants approach cos(sqrt(-lam)); the approach is slow
    # and non-uniform (the low levels converge like 1/log-scale in N), so the
    # check is a monotone-trend one over the degree ladder
    gaps = []
    for n in (4, 8, fredholm_N):
        sp = _spectrum(PolynomialPotential(n), "+", 48)
        g = []
        for lam in (-1.0, 2.0):
            val = fredholm(sp, lam, tol=1e-9)
            ref = cf.square_well("fredholm_plus", lam)
            g.append(abs(val / ref - 1.0))
        gaps.append(max(g))
    ok = bool(all(np.diff(gaps) < 0) and gaps[-1] < 0.6)
    reports.append(VerificationReport(
        f"square-well-limit[fredholm trend N<={fredholm_N}]",
        "lam in {-1, 2}", float(gaps[-1]), 0.6, ok, {"gaps": gaps}))
    # finite-N bilinear relation in Fredholm form:
    # e^{i phi/4} Dl+(e^{-i phi} lam) Dl-(lam) - (swap) = 2i sin(phi/4)
    r = []
    for n in (4, 8):
        p = PolynomialPotential(n)
        phi = p.phi
        rot = cmath.exp(-1j * phi)
        d0p, d0m, _ = cf.homogeneous_d0(n)
        for lam in (0.5, -1.2, 1.0j):
            da = determinant_pair(p, lam)
            db = determinant_pair(p, rot * lam)
            lhs = (cmath.exp(1j * phi / 4) * (db.dplus / d0p) * (da.dminus / d0m)
                   - cmath.exp(-1j * phi / 4) * (da.dplus / d0p) * (db.dminus / d0m))
            r.append(abs(lhs - 2j * math.sin(phi / 4)))
    reports.append(VerificationReport.build(
        "square-well-limit[fredholm-relation]", "N in {4,8}, 3 points",
        max(r), 1e-6))
    return reports


# -- reflection products & binomial identities -----------------------------------


def check_reflection_products(tol: float = 1e-12) -> list[VerificationReport]:
    """Gamma-reflection shaped identities among closed forms."""
    reports = []
    r = []
    for n in (2, 4, 6, 8):
        phi = 4.0 * math.pi / (n + 2)
        for v in np.linspace(-10, 10, 21):
            dp, dm = cf.binomial_determinants(n, v)
            dp2, dm2 = cf.binomial_determinants(n, -v)
            rhs = 2.0 / math.sin(phi / 2.0) * math.cos(phi / 4.0 * (v - 1.0))
            r.append(abs(dp * dm2 - rhs))
    reports.append(VerificationReport.build(
        "reflection[binomial]", "N in {2,4,6,8}, v grid", max(r), tol))
    r = []
    for lam in np.linspace(-6, 6, 25):
        dp, _ = cf.harmonic_determinants(lam)
        _, dm = cf.harmonic_determinants(-lam)
        r.append(abs(dp * dm - 2.0 * math.cos(math.pi / 4.0 * (lam - 1.0))))
    reports.append(VerificationReport.build(
        "reflection[harmonic]", "lam grid", max(r), tol))
    # whole-line combination equals the cosine closed form
    r = []
    for n in (4, 8):
        nu = 1.0 / (n + 2)
        for v in np.linspace(-10, 10, 21):
            dp, dm = cf.binomial_determinants(n, v)
            dp2, dm2 = cf.binomial_determinants(n, -v)
            lhs = 0.5 * (dp * dm2 + dp2 * dm)
            r.append(abs(lhs - cf.binomial_whole_line(n, v)))
    reports.append(VerificationReport.build(
        "whole-line-combination", "N in {4,8}, v grid", max(r), tol))
    # generalized-spectrum ratio: D_N(0;v)/calD_N(v) = 2^{(N-2)v/(N(N+2))} D_{N/2-1}(0)
    r = []
    for n in (4, 6, 8):
        dref_p, dref_m, _ = cf.homogeneous_d0(n // 2 - 1)
        for v in (-2.4, 0.0, 2.5):
            dp, dm = cf.binomial_determinants(n, v)
            gp, gm = cf.binomial_gen_determinants(n, v)
            fac = 2.0 ** ((n - 2) * v / (n * (n + 2)))
            # product form stays regular across the shared zeros
            r.append(abs(dp - fac * dref_p * gp))
            r.append(abs(dm - fac * dref_m * gm))
    reports.append(VerificationReport.build(
        "generalized-ratio[binomial]", "N in {4,6,8}, 3 couplings", max(r), tol))
    return reports


# -- route equivalence -------------------------------------------------------


def check_route_equivalence(tol_spectral: float = 1e-6,
                            tol_closed: float = 1e-8) -> list[VerificationReport]:
    """Spectral (Euler-Maclaurin) determinants against the inward-integration
    route, and binomial closed forms against the same route."""
    reports = []
    r = []
    pots = [PolynomialPotential(4), PolynomialPotential(6),
            PolynomialPotential(4, {2: -2.0}), PolynomialPotential(4, {2: 0.0}),
            PolynomialPotential(4, {2: 2.0})]
    for p in pots:
        for lam in (0.0, 1.0, 5.0):
            dr = determinant_pair(p, lam)
            for parity, ref in (("+", dr.dplus), ("-", dr.dminus)):
                sp = _spectrum(p, parity, 96)
                logd = extrapolate_levels(
                    sp, lambda s: determinant_spectral(s, lam, tol=1e-9).log_value)
                sgn = 1.0 if ref.real >= 0 else -1.0
                r.append(abs(sgn * cmath.exp(logd) / ref - 1.0))
    reports.append(VerificationReport.build(
        "route-equivalence[spectral-vs-inward]",
        "5 quartic/sextic potentials, lam in {0,1,5}", max(r), tol_spectral))
    r = []
    for n in (4, 6, 8):
        for v in (-3.0, 0.0, 2.0):
            d = determinant_pair(PolynomialPotential(n, {n // 2 - 1: v}), 0.0,
                                 rtol=1e-13)
            cp, cm = cf.binomial_determinants(n, v)
            # relative where the reference is O(1); absolute at its zeros
            r.append(abs(d.dplus - cp) / max(abs(cp), 1.0))
            r.append(abs(d.dminus - cm) / max(abs(cm), 1.0))
    reports.append(VerificationReport.build(
        "route-equivalence[closed-vs-inward]",
        "N in {4,6,8}, v in {-3,0,2}", max(r), tol_closed))
    return reports


# -- quartic-well determinant family -------------------------------------------


def check_qi_family(tol: float = 1e-6) -> list[VerificationReport]:
    """Functional relation, cocycle transfer, asymptotics and zero data of
    the quartic-well zero-energy determinants."""
    reports = []
    # functional relation on real samples and on a circle
    vs = list(np.linspace(-6, 6, 13)) + [3.0 * cmath.exp(1j * t)
                                         for t in np.linspace(0.1, 2 * math.pi, 8)]
    r = []
    for v in vs:
        a = qi_eval(v)
        b = qi_eval(J * v)
        lhs = (cmath.exp(1j * math.pi / 6.0) * b.qi_plus * a.qi_minus
               - cmath.exp(-1j * math.pi / 6.0) * a.qi_plus * b.qi_minus)
        r.append(abs(lhs - 2j) / 2.0)
    reports.append(VerificationReport.build(
        "qi-functional-relation", f"{len(vs)} couplings", max(r), tol))
    # cocycle transfer: the pair product satisfies the quartic cocycle in v
    r = []
    for v in [0.0, 0.9, -1.7, 1.2j] + _rng_points(8, 1.6, math.pi - 0.25):
        prods = []
        for ell in range(3):
            e = qi_eval((J ** ell) * v)
            prods.append(e.qi_plus * e.qi_minus)
        a, b, c = prods
        r.append(abs(a * b * c - (a + b + c + 2.0)))
    reports.append(VerificationReport.build(
        "qi-cocycle-transfer", "12 couplings", max(r), tol))
    # decay-side asymptotics: relative gap < 5% at v=5, shrinking to v=9
    gaps_p, gaps_m = [], []
    for v in (5.0, 7.0, 9.0):
        e = qi_eval(v)
        ap, am = qi_asymptotic(v, "decay")
        gaps_p.append(abs(e.qi_plus.real / ap - 1.0))
        gaps_m.append(abs(e.qi_minus.real / am - 1.0))
    ok = (gaps_p[0] < 0.05 and gaps_m[0] < 0.05
          and all(np.diff(gaps_p) < 0) and all(np.diff(gaps_m) < 0))
    reports.append(VerificationReport(
        "qi-asymptotics[decay]", "v in {5,7,9}", float(gaps_p[0]), 0.05, bool(ok),
        {"gap_plus": gaps_p, "gap_minus": gaps_m}))
    # oscillatory side: the cosine-form phase reproduces the zero positions,
    # w^{3/2}/3 + pi/8 = pi/2 + m pi for the m-th even-sector zero
    zp = _zeros(("qi", "+"), 24)
    ks = zp.ks
    m = np.arange(len(zp.energies))
    wpred = (3.0 * (math.pi / 2.0 - math.pi / 8.0 + m * math.pi)) ** (2 / 3)
    gap = np.abs(wpred - zp.energies)
    ok = bool(np.all(np.diff(gap[4:]) < 0.02) and gap[-1] < 0.05)
    reports.append(VerificationReport(
        "qi-asymptotics[zeros]", f"k <= {int(ks[-1])}", float(gap[-1]), 0.05, ok,
        {"gap_tail": list(map(float, gap[-4:]))}))
    # exact quantization at the first eight zeros
    zm = _zeros(("qi", "-"), 24)
    r = []
    for parity, z in (("+", zp), ("-", zm)):
        vals = qi_exact_quantization(z.energies[:4], parity)
        off = 0.5 + (1.0 / 6.0 if parity == "+" else -1.0 / 6.0)
        r.extend(np.abs(vals - (z.ks[:4] + off)))
    reports.append(VerificationReport.build(
        "qi-exact-quantization", "first eight zeros", max(r), tol))
    # spectral-function consistency: scaled pair vs Euler-Maclaurin build
    zf = qi_zero_zeta(n_max=2, K=96)
    d2 = cf.harmonic_determinants(0.0)
    r = []
    for v in (0.0, 1.0, 2.0):
        e = qi_eval(v, tol=1e-11)
        for parity, qv, d20, zspec in (("+", e.qi_plus, d2[0], zf.zeros_plus),
                                       ("-", e.qi_minus, d2[1], zf.zeros_minus)):
            lhs = qv.real / d20.real
            logd = extrapolate_levels(
                zspec, lambda s: determinant_spectral(s, v, tol=1e-8).log_value)
            r.append(abs(cmath.exp(logd).real / lhs - 1.0))
    reports.append(VerificationReport.build(
        "qi-generalized-determinant", "v in {0,1,2}", max(r), 1e-5))
    return reports


# -- reference-table reproduction ---------------------------------------------

# Printed reference values (7 digits; the last two columns of the s=2,3 rows
# are approximate in the source, checked at 2e-3)
_TABLE1_REF = {
    ("airy", "+"): {"zp0": 0.0861126, "d0": 0.9174909, "z0": 0.25,
                    "z1": 0.0, "z2": 1.3717212, "z3": 1.0},
    ("airy", "-"): {"zp0": -0.2299537, "d0": 1.2585417, "z0": -0.25,
                    "z1": -0.7290111, "z2": 0.5314572, "z3": 0.1125618},
    ("quartic", "+"): {"zp0": -0.1460318, "d0": 1.1572330, "z0": 0.25,
                       "z1": 1.5266059, "z2": 0.9147383, "z3": 0.8414950},
    ("quartic", "-"): {"zp0": -0.5471153, "d0": 1.7282604, "z0": -0.25,
                       "z1": 0.7633029, "z2": 0.0815825, "z3": 0.0190222},
    ("qi-zeros", "+"): {"zp0": -0.1685422, "d0": 1.1835782, "z0": 0.125,
                        "z1": -0.1980209, "z2": 0.3578, "z3": 0.10338},
    ("qi-zeros", "-"): {"zp0": -0.1780313, "d0": 1.1948628, "z0": -0.125,
                        "z1": -0.3960418, "z2": 0.2377, "z3": 0.03859},
}

_ROW_NAMES = {"zp0": "Z'(0)", "d0": "exp(-Z'(0))", "z0": "Z(0)",
              "z1": "Z(1)", "z2": "Z(2)", "z3": "Z(3)"}


def table1_report(fast: bool = False) -> list[dict]:
    """Recompute every entry of the reference zeta-value table.

    Analytic entries go through the package closed forms (5e-7 absolute on
    the 7-digit prints); the quartic s=2,3 and the zero-spectrum entries are
    Euler-Maclaurin values over computed spectra.  Unless `fast`, analytic
    entries also get an independent spectral-route cross-check in the
    `numeric` column.
    """
    from .qi import closed_zp1_generalized, qi_zero_zeta

    tau = 3.0 ** (1 / 3) * math.gamma(2 / 3) / math.gamma(1 / 3)
    computed: dict = {}
    # closed/analytic values
    d1p, d1m = cf.airy_determinants(0.0)
    zp1_1, z1_1 = closed_zp1(1)
    computed[("airy", "+")] = {"d0": d1p, "zp0": -math.log(d1p), "z0": 0.25,
                               "z1": (z1_1 + zp1_1) / 2.0, "z2": 1.0 / tau,
                               "z3": 1.0}
    computed[("airy", "-")] = {"d0": d1m, "zp0": -math.log(d1m), "z0": -0.25,
                               "z1": (z1_1 - zp1_1) / 2.0, "z2": tau * tau,
                               "z3": 0.5 - tau ** 3}
    d4p, d4m, _ = cf.homogeneous_d0(4)
    zp1_4, z1_4 = closed_zp1(4)
    computed[("quartic", "+")] = {"d0": d4p, "zp0": -math.log(d4p), "z0": 0.25,
                                  "z1": (z1_4 + zp1_4) / 2.0}
    computed[("quartic", "-")] = {"d0": d4m, "zp0": -math.log(d4m), "z0": -0.25,
                                  "z1": (z1_4 - zp1_4) / 2.0}
    d2p, d2m = cf.harmonic_determinants(0.0)
    gzp1 = closed_zp1_generalized(4)
    computed[("qi-zeros", "+")] = {"d0": d4p / d2p, "zp0": -math.log(d4p / d2p),
                                   "z0": 0.125, "z1": -gzp1}
    computed[("qi-zeros", "-")] = {"d0": d4m / d2m, "zp0": -math.log(d4m / d2m),
                                   "z0": -0.125, "z1": -2.0 * gzp1}

    # spectral-route values (fill the non-analytic entries; cross-check others)
    numeric: dict = {(c, p): {} for c, p in _TABLE1_REF}
    for parity in ("+", "-"):
        s4 = _spectrum(PolynomialPotential(4), parity, 64)
        computed[("quartic", parity)]["z2"] = zeta(s4, 2.0, tol=1e-10).value.real
        computed[("quartic", parity)]["z3"] = zeta(s4, 3.0, tol=1e-10).value.real
        if not fast:
            numeric[("quartic", parity)] = {
                "zp0": extrapolate_levels(s4, lambda s: zprime0(s, tol=1e-9)),
                "z0": zeta(s4, 0.0, tol=1e-10).value.real,
                "z1": zeta(s4, 1.0, tol=1e-10).value.real,
            }
            s1 = _spectrum(PolynomialPotential(1), parity, 48)
            numeric[("airy", parity)] = {
                "z0": zeta(s1, 0.0, tol=1e-10).value.real,
                "z1": zeta(s1, 1.0, tol=1e-10).value.real,
                "z2": zeta(s1, 2.0, tol=1e-10).value.real,
                "z3": zeta(s1, 3.0, tol=1e-10).value.real,
            }
    zf = qi_zero_zeta(n_max=3, K=48 if fast else 64)
    for parity, zv, zpr, zsp in (("+", zf.z_plus, zf.zprime0_plus, zf.zeros_plus),
                                 ("-", zf.z_minus, zf.zprime0_minus, zf.zeros_minus)):
        computed[("qi-zeros", parity)]["z2"] = zv[2]
        computed[("qi-zeros", parity)]["z3"] = zv[3]
        if not fast:
            numeric[("qi-zeros", parity)] = {
                "zp0": zpr,
                "z0": zeta(zsp, 0.0, tol=1e-9).value.real,
                "z1": zv[1],
            }

    rows = []
    for (col, parity), refs in _TABLE1_REF.items():
        for key, ref in refs.items():
            tol = 2e-3 if (col == "qi-zeros" and key in ("z2", "z3")) else 5e-7
            got = float(np.real(computed[(col, parity)][key]))
            num = numeric.get((col, parity), {}).get(key)
            ok = abs(got - ref) < tol
            if num is not None:
                ok = ok and abs(num - ref) < max(2e-5, tol)
            rows.append({"quantity": f"{col}[{parity}] {_ROW_NAMES[key]}",
                         "computed": got, "reference": ref,
                         "numeric": None if num is None else float(num),
                         "tolerance": tol, "passed": bool(ok)})
    return rows


# -- master runner -----------------------------------------------------------


SUITES = ("wronskian", "quantization", "cocycle", "sum-rules", "square-well",
          "square-well-limit", "reflection", "route-equivalence", "qi")


def run_suite(name: str) -> list[VerificationReport]:
    if name == "wronskian":
        out = [check_wronskian(PolynomialPotential(4)),
               check_wronskian(PolynomialPotential(1)),
               check_wronskian(PolynomialPotential(6, {2: 1.5}))]
        return out
    if name == "quantization":
        return [check_exact_quantization(PolynomialPotential(4)),
                check_exact_quantization(PolynomialPotential(1))]
    if name == "cocycle":
        return [check_cocycle(4), check_cocycle(1)]
    if name == "sum-rules":
        return check_sum_rules("all")
    if name == "square-well":
        return check_square_well_identities()
    if name == "square-well-limit":
        return check_square_well_limit()
    if name == "reflection":
        return check_reflection_products()
    if name == "route-equivalence":
        return check_route_equivalence()
    if name == "qi":
        return check_qi_family()
    raise ValueError(f"unknown suite {name!r}; known: {', '.join(SUITES)}")


def run_all() -> list[VerificationReport]:
    out = []
    for s in SUITES:
        out.extend(run_suite(s))
    return out
