"""Extremal ranks - the largest monomial rank in a given degree, closed form and brute force."""
from __future__ import annotations

from fractions import Fraction
from typing import Iterator, NamedTuple

from src.errors import PreconditionError
from src.monomial.model import CanonicalMonomial, Partition
from src.monomial.rank import generic_rank_naive, waring_rank


class ExtremalResult(NamedTuple):
    value: int
    exponents: CanonicalMonomial


class TableRow(NamedTuple):
    d: int
    generic: int
    maximum: int


def partitions(d: int, n: int, _smallest: int = 1) -> Iterator[Partition]:
    """Partitions of d into exactly n positive non-decreasing parts, lexicographic order."""
    if n == 1:
        if d >= _smallest:
            yield Partition((d,))
        return
    for first in range(_smallest, d // n + 1):
        for rest in partitions(d - first, n - 1, first):
            yield Partition((first,) + rest.parts)


def extremal_rank_ternary(d: int) -> ExtremalResult:
    """Maximum rank of a degree d monomial in three variables and a maximizer."""
    if d < 3:
        raise PreconditionError(f"ternary extremal rank needs d >= 3, got {d}")
    if d % 2:
        half = (d - 1) // 2
        return ExtremalResult(((d + 1) // 2) ** 2, CanonicalMonomial.of(1, half, half))
    half = d // 2
    return ExtremalResult(half * (half + 1), CanonicalMonomial.of(1, half - 1, half))


def extremal_rank_bruteforce(n: int, d: int) -> ExtremalResult:
    """Scan every partition of d into n parts; ties go to the lexicographically smallest."""
    if n < 1 or d < 1:
        raise PreconditionError(f"need n >= 1 and d >= 1, got ({n}, {d})")
    if d < n:
        raise PreconditionError(f"no partition of {d} into {n} positive parts")
    best: ExtremalResult | None = None
    for p in partitions(d, n):
        c = p.as_canonical()
        value = waring_rank(c)
        # strict comparison keeps the first (lexicographically smallest) maximizer
        if best is None or value > best.value:
            best = ExtremalResult(value, c)
    assert best is not None
    return best


def ternary_asymptotic_ratio(d: int) -> Fraction:
    """Largest ternary monomial rank over the generic rank, tends to 3/2."""
    return Fraction(extremal_rank_ternary(d).value, generic_rank_naive(3, d))


def rank_table(dmax: int) -> list[TableRow]:
    """Generic rank against the largest monomial rank for ternary forms, 3 <= d <= dmax."""
    return [
        TableRow(d, generic_rank_naive(3, d), extremal_rank_ternary(d).value)
        for d in range(3, dmax + 1)
    ]
