from .cyclotomic import CyclotomicNumber, embed_order, format_fraction, parse_fraction, zeta_power
from .linalg import matrix_rank, solve_linear
from .polynomial import IntegerPolynomial, cyclotomic_polynomial, euler_phi

__all__ = [
    "CyclotomicNumber",
    "IntegerPolynomial",
    "cyclotomic_polynomial",
    "embed_order",
    "euler_phi",
    "format_fraction",
    "matrix_rank",
    "parse_fraction",
    "solve_linear",
    "zeta_power",
]
