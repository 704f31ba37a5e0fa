"""Monomial decompositions - rank-many powers of roots-of-unity linear forms."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction

from src.exactnum import CyclotomicNumber, zeta_power
from src.monomial import CanonicalMonomial, Monomial, normalize
from src.waring.gamma import gamma_closed_form
from src.waring.points import cyclotomic_order, decomposition_points

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DecompositionTerm:
    """gamma_rational * zeta_N^gamma_zeta_exp * (sum_i zeta_N^form_exponents[i] x_i)^d."""

    gamma_rational: Fraction
    gamma_zeta_exp: int
    form_exponents: tuple[int, ...]

    def gamma(self, order: int) -> CyclotomicNumber:
        return zeta_power(order, self.gamma_zeta_exp) * self.gamma_rational

    def negated(self, order: int) -> DecompositionTerm:
        """Same term with gamma multiplied by -1."""
        if order % 2 == 0:
            return DecompositionTerm(
                self.gamma_rational, (self.gamma_zeta_exp + order // 2) % order, self.form_exponents
            )
        return DecompositionTerm(-self.gamma_rational, self.gamma_zeta_exp, self.form_exponents)


@dataclass(frozen=True)
class Decomposition:
    """Certified sum-of-powers decomposition of a canonical monomial."""

    monomial: CanonicalMonomial
    cyclotomic_order: int
    terms: tuple[DecompositionTerm, ...]
    source: str = ""

    @property
    def raw_variable_map(self) -> tuple[int, ...]:
        """Canonical position k lives in user variable raw_variable_map[k] (0-based)."""
        return self.monomial.permutation

    @property
    def degree(self) -> int:
        return self.monomial.degree

    @property
    def rank(self) -> int:
        return len(self.terms)


def decompose_canonical(c: CanonicalMonomial, source: str = "") -> Decomposition:
    order = cyclotomic_order(c)
    terms = []
    for point in decomposition_points(c):
        rational, zeta_exp = gamma_closed_form(c, point)
        terms.append(DecompositionTerm(rational, zeta_exp, point))
    logger.debug("decomposed %s: %d terms over Q(zeta_%d)", c, len(terms), order)
    return Decomposition(c, order, tuple(terms), source)


def decompose(m: Monomial, source: str = "") -> Decomposition:
    """Normalize, build the points and attach closed-form gammas."""
    c = normalize(m)
    return decompose_canonical(c, source or str(m))
