import math

import numpy as np
import pytest

from specdet.qi import (closed_zp1_generalized, figure_row, qi_asymptotic,
                        qi_eval, qi_exact_quantization, qi_sum_rules,
                        qi_zero_zeta)

W0_PLUS = 2.2195971
W1_MINUS = 3.2511776


def test_zero_coupling_values():
    e = qi_eval(0.0)
    assert abs(e.qi_plus.real - 6 ** (1 / 3) * 2 * math.sqrt(math.pi)
               / math.gamma(1 / 6)) < 1e-10
    assert abs(e.qi_minus.real - math.gamma(1 / 6)
               / (6 ** (1 / 3) * math.sqrt(math.pi))) < 1e-10
    assert abs(e.qi_plus.real - 1.1572330) < 5e-8
    assert abs(e.qi_minus.real - 1.7282604) < 5e-8


def test_first_zero():
    assert abs(qi_eval(-W0_PLUS).qi_plus.real) < 1e-6


def test_routes_agree():
    for v in (-3.0, 0.0, 2.0):
        a = qi_eval(v, "recessive", tol=1e-11)
        b = qi_eval(v, "spectral", K=64, tol=1e-9)
        assert abs(b.qi_plus.real / a.qi_plus.real - 1.0) < 1e-5
        assert abs(b.qi_minus.real / a.qi_minus.real - 1.0) < 1e-5


def test_spectral_route_rejects_complex():
    with pytest.raises(ValueError):
        qi_eval(1.0j, "spectral")
    with pytest.raises(ValueError):
        qi_eval(0.0, "nope")


def test_asymptotics_decay_side():
    gaps = []
    for v in (5.0, 7.0, 9.0):
        e = qi_eval(v)
        ap, am = qi_asymptotic(v, "decay")
        gaps.append(max(abs(e.qi_plus.real / ap - 1), abs(e.qi_minus.real / am - 1)))
    assert gaps[0] < 0.05
    assert gaps[2] < gaps[1] < gaps[0]


def test_asymptotics_oscillatory_phase():
    # cosine-form zeros approach the computed zeros as k grows
    for k, w in ((6, 10.029209),):
        m = k // 2
        wpred = (3 * (math.pi / 2 - math.pi / 8 + m * math.pi)) ** (2 / 3)
        assert abs(wpred - w) < 0.02


def test_asymptotic_domain_errors():
    with pytest.raises(ValueError):
        qi_asymptotic(-1.0, "decay")
    with pytest.raises(ValueError):
        qi_asymptotic(1.0, "sideways")


def test_exact_quantization_at_zeros():
    v = qi_exact_quantization(W0_PLUS, "+")
    assert abs(v - (0.5 + 1 / 6)) < 1e-6
    v = qi_exact_quantization(W1_MINUS, "-")
    assert abs(v - (1 + 0.5 - 1 / 6)) < 1e-6


def test_exact_quantization_monotone_grid():
    ws = np.linspace(1.0, 9.0, 9)
    vals = qi_exact_quantization(ws, "+")
    assert np.all(np.diff(vals) > 0)


def test_growth_order_on_log_scale():
    # log Qi^- / v^{3/2} -> -1/3 on the decay side
    for v in (7.0, 9.0):
        e = qi_eval(v)
        ratio = math.log(abs(e.qi_minus.real)) / v ** 1.5
        assert abs(ratio + 1.0 / 3.0) < 0.12 / v  # slow algebraic approach


def test_zero_zeta_values(qi_zeros):
    zf = qi_zero_zeta(n_max=3, K=48)
    assert abs(zf.z_plus[1] + 0.1980209) < 2e-6
    assert abs(zf.z_minus[1] + 0.3960418) < 4e-6
    assert abs(zf.z_plus[2] - 0.3578) < 2e-3
    assert abs(zf.z_minus[2] - 0.2377) < 2e-3
    assert abs(zf.z_plus[3] - 0.10338) < 2e-3
    assert abs(zf.z_minus[3] - 0.03859) < 2e-3
    assert abs(zf.zp1_closed - 0.1980209) < 5e-8
    assert abs(zf.d0_plus - 1.1835782) < 5e-8
    assert abs(zf.d0_minus - 1.1948628) < 5e-8
    assert abs(math.exp(-zf.zprime0_plus) - zf.d0_plus) < 2e-5
    assert abs(math.exp(-zf.zprime0_minus) - zf.d0_minus) < 2e-5


def test_closed_skew_value_quadrature():
    from _oracles import skew_zeta1_quadrature
    assert abs(closed_zp1_generalized(4) - skew_zeta1_quadrature(4, power=3)) < 1e-9


def test_sum_rules():
    zf = qi_zero_zeta(n_max=3, K=48)
    rules = qi_sum_rules(zf)
    assert abs(rules["rule1"]) < 1e-6
    assert abs(rules["skew-vs-closed"]) < 1e-6
    assert abs(rules["rule2"]) < 1e-3
    assert abs(rules["rule3"]) < 1e-3
    assert abs(rules["taylor-n1"]) < 1e-5


def test_figure_row():
    row = figure_row(-4.0)
    assert row["v"] == -4.0
    assert math.isfinite(row["asym_plus"])
    e = qi_eval(-4.0)
    assert abs(row["qi_plus"] - e.qi_plus.real) < 1e-12
    row0 = figure_row(2.0)
    assert abs(row0["log10_abs_plus"]
               - math.log10(abs(row0["qi_plus"]))) < 1e-12
