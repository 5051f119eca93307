"""Exact computation in quantum matrices and quantum grassmannians."""

from .coeff import LaurentPoly, RationalFunction, neg_q_pow
from .minors import ell, laplace_last_row, plucker_sum, quantum_minor
from .qmatrix import Generator, NCPoly, nc_mul, normal_form

__version__ = "0.1.0"
