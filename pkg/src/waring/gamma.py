"""Decomposition scalars - closed form and the exact linear system it must agree with."""
from __future__ import annotations

import logging
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import factorial, prod
from typing import Sequence

from src.errors import DomainError
from src.exactnum import CyclotomicNumber, solve_linear, zeta_power
from src.monomial import CanonicalMonomial, waring_rank
from src.waring.points import Point, cyclotomic_order

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def multinomial(alpha: tuple[int, ...]) -> int:
    """|alpha|! / prod(alpha_i!)."""
    return factorial(sum(alpha)) // prod(factorial(a) for a in alpha)


@lru_cache(maxsize=None)
def multinomial_table(d: int, n: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    """Every exponent vector of degree d in n variables with its multinomial coefficient."""

    def compositions(total: int, parts: int):
        if parts == 1:
            yield (total,)
            return
        for first in range(total, -1, -1):
            for rest in compositions(total - first, parts - 1):
                yield (first,) + rest

    return tuple((alpha, multinomial(alpha)) for alpha in compositions(d, n))


def _check_point(c: CanonicalMonomial, point: Sequence[int], order: int) -> None:
    if len(point) != c.num_vars:
        raise DomainError(f"point {tuple(point)} has {len(point)} coordinates, expected {c.num_vars}")
    if point[0] != 0:
        raise DomainError(f"point {tuple(point)} is not normalized to leading coordinate 1")
    for e, b in zip(point[1:], c.exponents[1:]):
        if not 0 <= e < order or (e * (b + 1)) % order:
            raise DomainError(f"exponent {e} is not a ({b + 1})-th root of unity in Q(zeta_{order})")


def gamma_closed_form(c: CanonicalMonomial, point: Point) -> tuple[Fraction, int]:
    """gamma = zeta_N^(-sum_{i>=2} b_i e_i) / (R * d! / prod(b_i!)), as (rational, zeta exponent)."""
    order = cyclotomic_order(c)
    _check_point(c, point, order)
    rational = Fraction(1, waring_rank(c) * multinomial(c.exponents))
    zeta_exp = -sum(b * e for b, e in zip(c.exponents[1:], point[1:])) % order
    return rational, zeta_exp


def solve_gamma_system(c: CanonicalMonomial, points: Sequence[Point]) -> list[CyclotomicNumber]:
    """Solve for the gammas over Q(zeta_N) directly.

    Equation beta (beta_i in 0..b_i for i >= 2) matches the coefficient of
    x_1^(d - |beta|) * prod x_i^beta_i; the matrix is a Kronecker product of
    Vandermonde matrices in the (b_i + 1)-th roots of unity.
    """
    order = cyclotomic_order(c)
    tail = c.exponents[1:]
    for point in points:
        _check_point(c, point, order)
    betas = list(product(*(range(b + 1) for b in tail)))
    roots = [zeta_power(order, k) for k in range(order)]
    matrix = [
        [roots[sum(e * beta_i for e, beta_i in zip(point[1:], beta)) % order] for point in points]
        for beta in betas
    ]
    target = Fraction(1, multinomial(c.exponents))
    rhs = [
        CyclotomicNumber.rational(target if beta == tail else 0, order)
        for beta in betas
    ]
    logger.debug("gamma system for %s: %d equations over Q(zeta_%d)", c, len(betas), order)
    return solve_linear(matrix, rhs)
