import json
import math

import numpy as np
import pytest
from scipy.special import ai_zeros

from specdet import PolynomialPotential
from specdet.spectrum import (RootSearchError, bs_seed, counting_check,
                              eigenvalues, generalized_zeros)
from _oracles import fd_eigenvalues

# reference zeros of the quartic-well determinant pair
QI_PLUS_ZEROS = [2.2195971, 5.4900693, 7.9276920, 10.029209]
QI_MINUS_ZEROS = [3.2511776, 6.1598396, 8.4854215, 10.525121]


def test_harmonic_exact(harmonic_spectra):
    for par, start in (("+", 1), ("-", 3)):
        s = harmonic_spectra[par]
        ref = start + 4.0 * np.arange(len(s.energies))
        assert np.max(np.abs(s.energies - ref)) < 1e-9


def test_airy_levels_match_scipy(airy_spectra):
    a, ap, _, _ = ai_zeros(48)
    assert np.max(np.abs(airy_spectra["-"].energies + a)) < 1e-9
    assert np.max(np.abs(airy_spectra["+"].energies + ap)) < 1e-9


def test_quartic_ground_state_fd_oracle(quartic_spectra):
    ora = fd_eigenvalues({4: 1.0}, "+", 3, L=12.0)
    assert abs(quartic_spectra["+"].energies[0] - 1.060362) < 5e-7
    assert abs(quartic_spectra["+"].energies[0] - ora[0]) < 1e-6
    assert np.max(np.abs(quartic_spectra["+"].energies[:3] - ora)) < 2e-5


def test_parity_interlacing(quartic_spectra):
    ep = quartic_spectra["+"].energies
    em = quartic_spectra["-"].energies
    n = min(len(ep), len(em))
    assert np.all(ep[:n] < em[:n])
    assert np.all(em[:n - 1] < ep[1:n])


def test_counting_consistency(quartic_spectra):
    assert counting_check(quartic_spectra["+"]) < 0.45
    assert counting_check(quartic_spectra["-"]) < 0.45


def test_labels_match_parity(quartic_spectra):
    assert np.all(quartic_spectra["+"].ks % 2 == 0)
    assert np.all(quartic_spectra["-"].ks % 2 == 1)


def test_qi_zero_values(qi_zeros):
    zp = qi_zeros["+"].energies
    zm = qi_zeros["-"].energies
    assert np.max(np.abs(zp[:4] - QI_PLUS_ZEROS)) < 1e-6
    assert np.max(np.abs(zm[:4] - QI_MINUS_ZEROS)) < 1e-6
    assert not qi_zeros["+"].admissible  # assumption is flagged


def test_qi_zero_counting_trend(qi_zeros):
    # (4/3) w^{3/2} / (2 pi) minus the offset decreases toward zero
    for par, off in (("+", 0.75), ("-", 0.25)):
        z = qi_zeros[par]
        dev = np.abs(2.0 / (3.0 * math.pi) * z.energies ** 1.5 - (z.ks + off))
        assert np.all(dev[4:] < dev[1])
        assert dev[-1] < 5e-4


def test_binomial_zero_progressions():
    for n in (2, 4, 6, 8):
        for par, offset in (("+", 0.0), ("-", 2.0)):
            z = generalized_zeros(("binomial", n, par), 6, tol=1e-9)
            ref = n / 2.0 + offset + (n + 2) * np.arange(6)
            assert np.max(np.abs(z.energies - ref)) < 1e-7


def test_binomial_n6_first_zeros():
    zp = generalized_zeros(("binomial", 6, "+"), 2, tol=1e-9)
    zm = generalized_zeros(("binomial", 6, "-"), 2, tol=1e-9)
    merged = sorted(list(zp.energies) + list(zm.energies))
    assert np.max(np.abs(np.array(merged) - [3.0, 5.0, 11.0, 13.0])) < 1e-7


def test_wholeline_zeros():
    for n in (4, 8):
        z = generalized_zeros(("binomial_wholeline", n), 3, tol=1e-9)
        ref = (n + 2) * (np.arange(3) + 0.5)
        assert np.max(np.abs(z.energies - ref)) < 1e-7


def test_bs_seed_values():
    assert abs(bs_seed(("qi", "+"), 0)
               - (3 * math.pi * 0.75 / 2) ** (2 / 3)) < 1e-14
    assert abs(bs_seed(("qi", "-"), 1) - (3 * math.pi * 1.25 / 2) ** (2 / 3)) < 1e-14
    assert bs_seed(("binomial", 6, "+"), 2) == 11.0
    assert abs(bs_seed(PolynomialPotential(2), 3) - 7.0) < 1e-9
    with pytest.raises(ValueError):
        bs_seed(("qi", "+"), -1)


def test_seed_accuracy_against_levels(quartic_spectra):
    s = quartic_spectra["+"]
    for i in (5, 20):
        seed = bs_seed(PolynomialPotential(4), int(s.ks[i]))
        assert abs(seed / s.energies[i] - 1) < 0.02


def test_double_well_negative_levels():
    p = PolynomialPotential(4, {2: -8.0})
    sp = eigenvalues(p, "+", 5, tol=1e-9)
    sm = eigenvalues(p, "-", 5, tol=1e-9)
    assert sp.energies[0] < 0  # deep wells
    assert np.all(sp.energies < sm.energies)
    assert np.all(sm.energies[:-1] < sp.energies[1:])


def test_extended_tail_model(quartic_spectra):
    s = quartic_spectra["+"].subset(40)
    full = quartic_spectra["+"]
    ext = s.extended(len(full.energies))
    rel = np.abs(ext[40:] - full.energies[40:]) / full.energies[40:]
    assert np.max(rel) < 1e-8


def test_exports(tmp_path, harmonic_spectra):
    s = harmonic_spectra["+"]
    path = tmp_path / "spec.csv"
    s.to_csv(path, meta={"tol": s.tol})
    lines = path.read_text().splitlines()
    assert lines[0].startswith("#")
    assert lines[1] == "k,parity,E_k"
    assert lines[2].startswith("0,+,")
    d = s.to_json_dict()
    json.dumps(d)
    assert d["levels"][0]["k"] == 0 and abs(d["levels"][0]["E"] - 1.0) < 1e-9


def test_bad_inputs():
    with pytest.raises(ValueError):
        eigenvalues(PolynomialPotential(4), "+", 0)
    with pytest.raises(ValueError):
        generalized_zeros(("nope",), 3)
    with pytest.raises(ValueError):
        generalized_zeros(("binomial", 5, "+"), 3)
    with pytest.raises(ValueError):
        generalized_zeros(("binomial_wholeline", 6), 3)
