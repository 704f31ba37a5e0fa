"""Apolarity action - differential operators y^alpha acting on monomials x^beta."""
from __future__ import annotations

from math import perm, prod
from typing import Sequence

from src.errors import PreconditionError
from src.monomial import CanonicalMonomial, Monomial, MonomialIdeal
from src.waring.gamma import multinomial_table


def apply_differential(alpha: Sequence[int], target: Sequence[int]) -> tuple[int, tuple[int, ...] | None]:
    """d^alpha x^beta = prod(beta_i! / (beta_i - alpha_i)!) x^(beta - alpha), or (0, None)."""
    if len(alpha) != len(target):
        raise PreconditionError(f"operator has {len(alpha)} variables, form has {len(target)}")
    if any(a > b for a, b in zip(alpha, target)):
        return 0, None
    coefficient = prod(perm(b, a) for a, b in zip(alpha, target))
    return coefficient, tuple(b - a for a, b in zip(alpha, target))


def annihilates(alpha: Sequence[int], target: Sequence[int]) -> bool:
    return apply_differential(alpha, target)[0] == 0


def ideal_annihilates(ideal: MonomialIdeal, m: Monomial | CanonicalMonomial) -> bool:
    """Every generator kills the monomial, so the whole ideal sits in its perp."""
    return all(annihilates(g, m.exponents) for g in ideal.generators)


def catalecticant_matrix(c: CanonicalMonomial, a: int) -> list[list[int]]:
    """Rows: degree a operators y^alpha; columns: degree d - a monomials; entries by differentiation."""
    if not 0 <= a <= c.degree:
        raise PreconditionError(f"catalecticant degree {a} outside 0..{c.degree}")
    n = c.num_vars
    rows = [alpha for alpha, _ in multinomial_table(a, n)]
    cols = {gamma: j for j, (gamma, _) in enumerate(multinomial_table(c.degree - a, n))}
    matrix = []
    for alpha in rows:
        row = [0] * len(cols)
        coefficient, result = apply_differential(alpha, c.exponents)
        if result is not None:
            row[cols[result]] = coefficient
        matrix.append(row)
    return matrix
