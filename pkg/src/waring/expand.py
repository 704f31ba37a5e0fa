"""Exact expansion of power sums and the decomposition verifier."""
from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from math import lcm
from typing import Iterator, Mapping, Sequence

from src.exactnum import CyclotomicNumber
from src.waring.decompose import Decomposition, DecompositionTerm
from src.waring.gamma import multinomial_table

logger = logging.getLogger(__name__)

Exponents = tuple[int, ...]
# exponent vector -> coefficients of zeta_N^0 .. zeta_N^(N-1), scaled by a common denominator
Accumulator = dict[Exponents, list[int]]


class MultiCycloPoly(Mapping[Exponents, CyclotomicNumber]):
    """Homogeneous polynomial with Q(zeta_N) coefficients; zero coefficients are never stored."""

    def __init__(self, order: int, coefficients: Mapping[Exponents, CyclotomicNumber] | None = None):
        self.order = order
        self._coeffs: dict[Exponents, CyclotomicNumber] = {}
        degrees = set()
        for alpha, value in (coefficients or {}).items():
            value = value.lift(order) if value.order != order else value
            if not value.is_zero():
                self._coeffs[tuple(alpha)] = value
                degrees.add(sum(alpha))
        if len(degrees) > 1:
            raise ValueError(f"mixed degrees {sorted(degrees)} in a homogeneous polynomial")

    @classmethod
    def from_rational(cls, order: int, coefficients: Mapping[Exponents, Fraction | int]) -> MultiCycloPoly:
        return cls(order, {a: CyclotomicNumber.rational(v, order) for a, v in coefficients.items()})

    def __getitem__(self, alpha: Exponents) -> CyclotomicNumber:
        return self._coeffs[tuple(alpha)]

    def __iter__(self) -> Iterator[Exponents]:
        return iter(sorted(self._coeffs))

    def __len__(self) -> int:
        return len(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultiCycloPoly):
            return NotImplemented
        if self.order != other.order:
            m = lcm(self.order, other.order)
            return MultiCycloPoly(m, self._coeffs) == MultiCycloPoly(m, other._coeffs)
        return self._coeffs == other._coeffs

    def is_monomial(self, exponents: Exponents) -> bool:
        """Exactly one term, x^exponents with coefficient 1."""
        return (
            len(self._coeffs) == 1
            and tuple(exponents) in self._coeffs
            and self._coeffs[tuple(exponents)] == CyclotomicNumber.one(self.order)
        )

    def __repr__(self) -> str:
        body = ", ".join(f"{a}: {self._coeffs[a]}" for a in self)
        return f"MultiCycloPoly(order={self.order}, {{{body}}})"


def _expand_chunk(args: tuple[int, int, int, int, list[DecompositionTerm]]) -> Accumulator:
    """Expand scale * sum gamma_j L_j^d for root-of-unity forms into integer zeta-vectors."""
    d, n, order, scale, terms = args
    table = multinomial_table(d, n)
    acc: Accumulator = {}
    for term in terms:
        weight = term.gamma_rational * scale
        if weight.denominator != 1:
            raise ValueError("scale must clear every gamma denominator")
        w = weight.numerator
        e = term.form_exponents
        shift = term.gamma_zeta_exp
        for alpha, mult in table:
            k = (shift + sum(ei * ai for ei, ai in zip(e, alpha))) % order
            slot = acc.get(alpha)
            if slot is None:
                slot = acc[alpha] = [0] * order
            slot[k] += w * mult
    return acc


def _merge(into: Accumulator, part: Accumulator) -> None:
    for alpha, vec in part.items():
        slot = into.get(alpha)
        if slot is None:
            into[alpha] = list(vec)
        else:
            for k, v in enumerate(vec):
                slot[k] += v


def expand_power_sum(dec: Decomposition, jobs: int = 1, chunk_size: int = 16) -> MultiCycloPoly:
    """sum_j gamma_j L_j^d expanded by the multinomial theorem, exactly.

    Terms expand independently, so with jobs > 1 chunks go to worker processes and the
    integer accumulators are added; the result does not depend on scheduling.
    """
    d, n, order = dec.degree, dec.monomial.num_vars, dec.cyclotomic_order
    scale = lcm(*(t.gamma_rational.denominator for t in dec.terms)) if dec.terms else 1
    terms = list(dec.terms)
    chunks = [terms[i:i + chunk_size] for i in range(0, len(terms), chunk_size)] or [[]]
    acc: Accumulator = {}
    if jobs > 1 and len(chunks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(_expand_chunk, [(d, n, order, scale, ch) for ch in chunks]):
                _merge(acc, part)
    else:
        for ch in chunks:
            _merge(acc, _expand_chunk((d, n, order, scale, ch)))
    coeffs = {
        alpha: CyclotomicNumber.from_residue(order, [Fraction(v, scale) for v in vec])
        for alpha, vec in acc.items()
    }
    result = MultiCycloPoly(order, coeffs)
    logger.debug("expanded %d terms: %d monomials touched, %d survive", len(terms), len(acc), len(result))
    return result


def verify(dec: Decomposition, jobs: int = 1, chunk_size: int = 16) -> bool:
    """True iff the decomposition expands to exactly the target monomial."""
    n = dec.monomial.num_vars
    if not dec.terms or any(len(t.form_exponents) != n for t in dec.terms):
        return False
    return expand_power_sum(dec, jobs, chunk_size).is_monomial(dec.monomial.exponents)


def expand_linear_powers(
    gammas: Sequence[CyclotomicNumber],
    forms: Sequence[Sequence[CyclotomicNumber]],
    d: int,
    order: int,
) -> MultiCycloPoly:
    """sum_j gammas[j] * (sum_v forms[j][v] x_v)^d with arbitrary Q(zeta_N) coefficients."""
    if not forms:
        return MultiCycloPoly(order)
    n = len(forms[0])
    table = multinomial_table(d, n)
    totals: dict[Exponents, CyclotomicNumber] = {}
    zero = CyclotomicNumber.zero(order)
    for gamma, form in zip(gammas, forms):
        coeffs = [c.lift(order) if c.order != order else c for c in form]
        powers = []
        for c in coeffs:
            row = [CyclotomicNumber.one(order)]
            for _ in range(d):
                row.append(row[-1] * c)
            powers.append(row)
        for alpha, mult in table:
            value = gamma * mult
            for v, a in enumerate(alpha):
                if a:
                    value = value * powers[v][a]
                    if value.is_zero():
                        break
            totals[alpha] = totals.get(alpha, zero) + value
    return MultiCycloPoly(order, totals)
