"""specdet: spectral determinants, zeta functions and exact quantization for
1D Schrodinger operators with polynomial potentials."""

from .backend import backend_name
from .potential import (PolynomialPotential, parse_potential, conjugate,
                        beta_expansion, action_normalization,
                        heat_coefficients, bs_coefficients)
from .recessive import solve_recessive, determinant_pair

__version__ = "0.1.0"

__all__ = [
    "PolynomialPotential", "parse_potential", "conjugate", "beta_expansion",
    "action_normalization", "heat_coefficients", "bs_coefficients",
    "solve_recessive", "determinant_pair", "backend_name", "__version__",
]
