import pytest

from specdet import PolynomialPotential
from specdet.spectrum import eigenvalues, generalized_zeros


@pytest.fixture(scope="session")
def quartic():
    return PolynomialPotential(4)


@pytest.fixture(scope="session")
def quartic_spectra(quartic):
    return {par: eigenvalues(quartic, par, 80, tol=1e-11) for par in "+-"}


@pytest.fixture(scope="session")
def airy_spectra():
    p = PolynomialPotential(1)
    return {par: eigenvalues(p, par, 48, tol=1e-11) for par in "+-"}


@pytest.fixture(scope="session")
def harmonic_spectra():
    p = PolynomialPotential(2)
    return {par: eigenvalues(p, par, 60, tol=1e-11) for par in "+-"}


@pytest.fixture(scope="session")
def qi_zeros():
    return {par: generalized_zeros(("qi", par), 48, tol=1e-10) for par in "+-"}
