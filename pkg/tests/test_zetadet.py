import cmath
import math

import numpy as np
import pytest

from specdet import PolynomialPotential, determinant_pair
from specdet.potential import z0_pair
from specdet.spectrum import Spectrum
from specdet.zetadet import (DeterminantValue, ZetaPoleError, closed_zp1,
                             determinant_spectral, extrapolate_levels,
                             fredholm, rescale_determinant, rescale_spectrum,
                             rescale_zeta, zeta, zprime0)

TAU = 3 ** (1 / 3) * math.gamma(2 / 3) / math.gamma(1 / 3)


def test_direct_summation_matches_for_large_s(quartic_spectra):
    s = quartic_spectra["+"]
    for sv in (3.0, 5.0):
        z = zeta(s, sv, tol=1e-11)
        direct = np.sum(s.extended(4000) ** (-sv))
        assert abs(z.value.real - direct) < max(1e-10, z.error_estimate)


def test_harmonic_zeta_values(harmonic_spectra):
    z2 = zeta(harmonic_spectra["+"], 2.0, tol=1e-11).value.real \
        + zeta(harmonic_spectra["-"], 2.0, tol=1e-11).value.real
    assert abs(z2 - math.pi ** 2 / 8) < 1e-10


def test_airy_zeta_tau_values(airy_spectra):
    vals = {("-", 1): -TAU, ("-", 2): TAU ** 2, ("+", 2): 1 / TAU,
            ("+", 3): 1.0, ("-", 3): 0.5 - TAU ** 3, ("+", 1): 0.0}
    for (par, n), ref in vals.items():
        z = zeta(airy_spectra[par], float(n), tol=1e-11)
        assert abs(z.value.real - ref) < 5e-10, (par, n)


def test_quartic_table_zetas(quartic_spectra):
    refs = {("+", 1): 1.5266059, ("-", 1): 0.7633029, ("+", 2): 0.9147383,
            ("-", 2): 0.0815825, ("+", 3): 0.8414950, ("-", 3): 0.0190222}
    for (par, n), ref in refs.items():
        z = zeta(quartic_spectra[par], float(n), tol=1e-10)
        assert abs(z.value.real - ref) < 5e-7, (par, n)


def test_zeta_at_zero_trace_identity(quartic_spectra, airy_spectra):
    for spectra, ref in ((quartic_spectra, 0.25), (airy_spectra, 0.25)):
        zp = zeta(spectra["+"], 0.0, tol=1e-10).value.real
        zm = zeta(spectra["-"], 0.0, tol=1e-10).value.real
        assert abs(zp - ref) < 1e-8
        assert abs(zm + ref) < 1e-8


def test_pole_detection(harmonic_spectra):
    with pytest.raises(ZetaPoleError) as ei:
        zeta(harmonic_spectra["+"], 1.0)
    assert abs(ei.value.residue - 0.25) < 1e-12
    # finite parts differ by the skew value
    zp = zeta(harmonic_spectra["+"], 1.0, finite_part=True).value.real
    zm = zeta(harmonic_spectra["-"], 1.0, finite_part=True).value.real
    assert abs((zp - zm) - math.pi / 4) < 1e-11


def test_residue_at_quartic_pole_by_contour(quartic_spectra):
    # residue of Z(s) at s = 3/4 equals c_{-3/4}/Gamma(3/4)
    s0 = 0.75
    r = 0.1
    n = 24
    acc = 0.0 + 0j
    for j in range(n):
        th = 2 * math.pi * (j + 0.5) / n
        s = s0 + r * cmath.exp(1j * th)
        acc += zeta(quartic_spectra["+"], s, tol=1e-10).value \
            * r * cmath.exp(1j * th)
    res = (acc / n).real
    c34 = math.gamma(0.25) / (4 * math.sqrt(math.pi))  # per-parity
    assert abs(res - c34 / math.gamma(0.75)) < 1e-6


def test_lambda_shift(quartic_spectra):
    s = quartic_spectra["+"]
    lam = 1.5
    z = zeta(s, 2.0, lam, tol=1e-11)
    direct = np.sum((s.extended(4000) + lam) ** -2.0)
    assert abs(z.value.real - direct) < 1e-9


def test_zprime0_quartic(quartic_spectra):
    for par, ref in (("+", 1.1572330), ("-", 1.7282604)):
        v = extrapolate_levels(quartic_spectra[par],
                               lambda s: zprime0(s, tol=1e-9))
        assert abs(math.exp(-v) - ref) < 2e-6


def test_determinant_routes_agree(quartic_spectra):
    for lam in (0.0, 1.0, 5.0):
        dr = determinant_pair(PolynomialPotential(4), lam)
        for par, ref in (("+", dr.dplus), ("-", dr.dminus)):
            logd = extrapolate_levels(
                quartic_spectra[par],
                lambda s: determinant_spectral(s, lam, tol=1e-9).log_value)
            assert abs(cmath.exp(logd) / ref - 1.0) < 1e-6


def test_determinant_exact_zero(quartic_spectra):
    s = quartic_spectra["-"]
    d = determinant_spectral(s, -s.energies[0], tol=1e-8)
    assert d.value == 0.0


def _square_well_spectrum(parity: str) -> Spectrum:
    pol = 0 if parity == "+" else 1
    ks = np.arange(pol, 120, 2)
    E = (ks + 1.0) ** 2 * math.pi ** 2 / 4.0
    return Spectrum(potential=None, parity=parity, ks=ks, energies=E,
                    mu=0.5, bs_exps=np.array([0.5]),
                    bs_vals=np.array([2.0 / math.pi]), b0=-0.5,
                    tol=1e-14, family="square-well")


def test_fredholm_square_well():
    sp = _square_well_spectrum("+")
    assert abs(fredholm(sp, 0.0) - 1.0) == 0.0          # empty product
    val = fredholm(sp, -math.pi ** 2 / 4.0 + 1e-12)
    assert abs(val) < 1e-10                              # first zero
    for lam in (-1.0, 2.5):
        ref = cmath.cos(cmath.sqrt(complex(-lam)))
        assert abs(fredholm(sp, lam) / ref - 1.0) < 1e-9


def test_fredholm_quartic_cross_route(quartic_spectra):
    # Delta(lam) = D(lam)/D(0) for mu < 1; anchor D(0) = 2
    lam = 1.0
    dp = fredholm(quartic_spectra["+"], lam, tol=1e-10)
    dm = fredholm(quartic_spectra["-"], lam, tol=1e-10)
    dr = determinant_pair(PolynomialPotential(4), lam)
    d0 = determinant_pair(PolynomialPotential(4), 0.0)
    assert abs(dp * dm - dr.d / d0.d) < 1e-6


def test_fredholm_taylor_coefficients(quartic_spectra):
    # -log Delta has Taylor coefficients Z(n)/n; finite differences in lam
    s = quartic_spectra["+"]
    h = 0.05
    grid = [fredholm(s, k * h, tol=1e-12) for k in range(-3, 4)]
    logs = np.log(np.array([abs(g) for g in grid]))
    d1 = (logs[4] - logs[2]) / (2 * h)
    d2 = (logs[4] - 2 * logs[3] + logs[2]) / h ** 2
    d3 = (logs[5] - 2 * logs[4] + 2 * logs[2] - logs[1]) / (2 * h ** 3)
    z1 = zeta(s, 1.0, tol=1e-11).value.real
    z2 = zeta(s, 2.0, tol=1e-11).value.real
    z3 = zeta(s, 3.0, tol=1e-11).value.real
    # -log Delta = sum Z(n)/n (-lam)^n  =>  d/dlam log Delta at 0 = Z(1), etc.
    assert abs(d1 - z1) < 1e-7
    assert abs(d2 + z2) < 1e-5
    assert abs(d3 - 2 * z3) / 2 < 1e-3


def test_scaling_law_spectrum(harmonic_spectra):
    alpha = 2.5
    s = harmonic_spectra["+"]
    sc = rescale_spectrum(s, alpha)
    for sv in (1.5, 3.0):
        z1 = zeta(sc, sv, tol=1e-11).value
        z2 = alpha ** (-sv) * zeta(s, sv, tol=1e-11).value
        assert abs(z1 / z2 - 1.0) < 1e-12
    r = rescale_zeta(zeta(s, 2.0, 0.8, tol=1e-11), alpha)
    direct = zeta(sc, 2.0, alpha * 0.8, tol=1e-11).value
    assert abs(r.value / direct - 1.0) < 1e-10


def test_scaling_alpha_one_identity(harmonic_spectra):
    z = zeta(harmonic_spectra["+"], 2.0, tol=1e-11)
    assert rescale_zeta(z, 1.0).value == z.value


def test_scaling_law_harmonic_determinant():
    # dilation of the harmonic determinant reproduces the v-dependent form
    v = 3.0
    alpha = math.sqrt(v)
    lam = 1.2
    dr = determinant_pair(PolynomialPotential(2), lam / alpha)
    z0p, _ = z0_pair(PolynomialPotential(2), lam / alpha)
    scaled = rescale_determinant(
        DeterminantValue(lam=lam / alpha, value=dr.dplus, route="recessive",
                         error_estimate=1e-12), alpha, z0p)
    x = lam / alpha
    ref = (math.sqrt(2) * v ** 0.125) ** (1.0 - x) * math.sqrt(2 * math.pi) \
        / math.gamma((1 + x) / 4.0)
    assert abs(scaled.value / ref - 1.0) < 1e-10
    assert abs(scaled.lam - lam) < 1e-15


def test_scaling_law_homogeneous_zero_argument():
    # det(-d^2 + v q^M)^{+-} = alpha^{Z_M(0)} D_M^{+-}(0) with alpha = v^{2/(M+2)}
    # (non-monic potentials are served exclusively through this dilation);
    # the dilated determinant's zero sits at alpha*E_0 of the base problem
    M, v = 4, 2.0
    alpha = v ** (2.0 / (M + 2))
    z0p, z0m = z0_pair(PolynomialPotential(M), 0.0)
    d0 = determinant_pair(PolynomialPotential(M), 0.0)
    det_v_plus = alpha ** complex(z0p).real * d0.dplus
    det_v_minus = alpha ** complex(z0m).real * d0.dminus
    assert abs(det_v_plus - alpha ** 0.25 * d0.dplus) < 1e-14
    assert abs(det_v_minus - alpha ** -0.25 * d0.dminus) < 1e-14
    from specdet.spectrum import eigenvalues
    e_base = eigenvalues(PolynomialPotential(M), "+", 2, tol=1e-10).energies
    lam0 = -alpha * e_base[0]
    d = determinant_pair(PolynomialPotential(M), lam0 / alpha)
    assert abs(d.dplus) < 1e-8


def test_closed_zp1():
    zp1, z1 = closed_zp1(4)
    assert abs(zp1 - 0.7633029) < 5e-8
    assert abs(z1 - 3 * zp1) < 1e-12
    zp1_1, z1_1 = closed_zp1(1)
    assert abs(zp1_1 - TAU) < 1e-12
    assert abs(z1_1 + TAU) < 1e-12
    with pytest.raises(ZetaPoleError):
        closed_zp1(2)


def test_closed_zp1_quadrature_oracle():
    from _oracles import skew_zeta1_quadrature
    for n in (3, 4, 5, 6, 7, 8):
        assert abs(closed_zp1(n)[0] - skew_zeta1_quadrature(n)) < 1e-9
