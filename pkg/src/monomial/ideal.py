"""Monomial ideals - minimal generators, perp ideals of monomials, intersections and colons."""
from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Sequence

from src.errors import PreconditionError
from src.monomial.model import CanonicalMonomial, Monomial

Exponents = tuple[int, ...]


def divides(a: Sequence[int], b: Sequence[int]) -> bool:
    """y^a | y^b."""
    return all(x <= y for x, y in zip(a, b))


def minimalize(generators: Iterable[Sequence[int]]) -> tuple[Exponents, ...]:
    """Drop every generator divisible by another; lexicographic output."""
    unique = {tuple(g) for g in generators}
    # a divisor has strictly smaller degree, so it is kept before its multiples
    kept: list[Exponents] = []
    for g in sorted(unique, key=lambda g: (sum(g), g)):
        if not any(divides(h, g) for h in kept):
            kept.append(g)
    return tuple(sorted(kept))


@dataclass(frozen=True)
class MonomialIdeal:
    """Ideal of k[y_1..y_n] given by minimal monomial generators."""

    num_vars: int
    generators: tuple[Exponents, ...]

    def __post_init__(self) -> None:
        if self.num_vars < 1:
            raise PreconditionError("an ideal needs at least one variable")
        if any(len(g) != self.num_vars for g in self.generators):
            raise PreconditionError(f"generators must have {self.num_vars} exponents")
        if any(e < 0 for g in self.generators for e in g):
            raise PreconditionError("negative exponent in a generator")
        object.__setattr__(self, "generators", minimalize(self.generators))

    @classmethod
    def from_generators(cls, generators: Iterable[Sequence[int]], num_vars: int | None = None) -> MonomialIdeal:
        gens = [tuple(g) for g in generators]
        n = num_vars if num_vars is not None else (len(gens[0]) if gens else 1)
        return cls(n, tuple(gens))

    def contains(self, exponents: Sequence[int]) -> bool:
        """Membership of y^exponents: divisible by some generator."""
        if len(exponents) != self.num_vars:
            raise PreconditionError(f"expected {self.num_vars} exponents, got {len(exponents)}")
        return any(divides(g, exponents) for g in self.generators)

    def __contains__(self, exponents: Sequence[int]) -> bool:
        return self.contains(exponents)

    def intersect(self, other: MonomialIdeal) -> MonomialIdeal:
        if other.num_vars != self.num_vars:
            raise PreconditionError(
                f"cannot intersect ideals in {self.num_vars} and {other.num_vars} variables"
            )
        lcms = (
            tuple(max(x, y) for x, y in zip(g, h))
            for g in self.generators
            for h in other.generators
        )
        return MonomialIdeal(self.num_vars, tuple(lcms))

    def colon_variable(self, i: int) -> MonomialIdeal:
        """I : (y_i), 0-based variable index."""
        if not 0 <= i < self.num_vars:
            raise PreconditionError(f"variable index {i} out of range")
        lowered = (
            tuple(max(e - 1, 0) if k == i else e for k, e in enumerate(g))
            for g in self.generators
        )
        return MonomialIdeal(self.num_vars, tuple(lowered))


def perp_generators(c: CanonicalMonomial) -> MonomialIdeal:
    """(y_1^{b_1+1}, ..., y_n^{b_n+1}), the annihilator of x^b."""
    n = c.num_vars
    gens = tuple(
        tuple(b + 1 if k == i else 0 for k in range(n))
        for i, b in enumerate(c.exponents)
    )
    return MonomialIdeal(n, gens)


def monomial_perp(m: Monomial) -> MonomialIdeal:
    """Annihilator of a raw monomial; absent variables contribute y_i itself."""
    n = m.num_vars
    gens = tuple(
        tuple(e + 1 if k == i else 0 for k in range(n))
        for i, e in enumerate(m.exponents)
    )
    return MonomialIdeal(n, gens)


def ideal_intersect(ideals: Sequence[MonomialIdeal]) -> MonomialIdeal:
    """Pairwise lcm closure, then minimalization."""
    if not ideals:
        raise PreconditionError("need at least one ideal to intersect")
    return reduce(MonomialIdeal.intersect, ideals)


def ideal_colon_variable(ideal: MonomialIdeal, i: int) -> MonomialIdeal:
    return ideal.colon_variable(i)
