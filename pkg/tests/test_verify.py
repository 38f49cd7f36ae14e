import pytest

from specdet import PolynomialPotential
from specdet.verify import (check_cocycle, check_exact_quantization,
                            check_qi_family, check_reflection_products,
                            check_route_equivalence, check_square_well_identities,
                            check_square_well_limit, check_sum_rules,
                            check_wronskian, run_suite, SUITES)


def _assert_all(reports):
    bad = [r for r in reports if not r.passed]
    assert not bad, "\n".join(
        f"{r.identity}: {r.max_residual:.3e} > {r.tolerance:.1e} {r.details}"
        for r in bad)


def test_wronskian_homogeneous_and_binomial():
    _assert_all([check_wronskian(PolynomialPotential(4)),
                 check_wronskian(PolynomialPotential(1)),
                 check_wronskian(PolynomialPotential(6, {2: 1.5}))])


def test_wronskian_rhs_phase_for_binomial():
    # the residue phase makes the right-hand side 2i e^{i phi v/4}
    rep = check_wronskian(PolynomialPotential(8, {3: -0.8}))
    assert rep.passed


def test_exact_quantization_suite():
    _assert_all([check_exact_quantization(PolynomialPotential(4)),
                 check_exact_quantization(PolynomialPotential(1))])


def test_exact_quantization_with_residue_shift():
    # binomial potential exercises the non-zero shift term
    rep = check_exact_quantization(PolynomialPotential(6, {2: 1.5}), K=7)
    assert rep.passed, rep


def test_exact_quantization_rejects_harmonic():
    with pytest.raises(ValueError):
        check_exact_quantization(PolynomialPotential(2))


def test_cocycles():
    _assert_all([check_cocycle(4), check_cocycle(1)])
    with pytest.raises(ValueError):
        check_cocycle(3)


def test_sum_rules_all():
    _assert_all(check_sum_rules("all"))


def test_square_well_identities():
    _assert_all(check_square_well_identities())


def test_square_well_limit():
    _assert_all(check_square_well_limit())


def test_reflection_products():
    _assert_all(check_reflection_products())


def test_route_equivalence():
    _assert_all(check_route_equivalence())


def test_qi_family():
    _assert_all(check_qi_family())


def test_suite_registry():
    assert set(SUITES) >= {"wronskian", "cocycle", "sum-rules", "qi"}
    with pytest.raises(ValueError):
        run_suite("bogus")
