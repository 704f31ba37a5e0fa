"""Hilbert functions of pure-power complete intersections, by series and by counting."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from math import comb, prod
from typing import Iterator, Sequence

from src.errors import PreconditionError
from src.exactnum.polynomial import IntegerPolynomial

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CIData:
    """Quotient of k[y_1..y_n] by (y_1^a_1, ..., y_k^a_k), k <= n."""

    num_vars: int
    gen_degrees: tuple[int, ...]

    def __post_init__(self) -> None:
        gens = tuple(int(a) for a in self.gen_degrees)
        if self.num_vars < 1:
            raise PreconditionError("need at least one variable")
        if not gens:
            raise PreconditionError("need at least one generator")
        if len(gens) > self.num_vars:
            raise PreconditionError(f"{len(gens)} generators in {self.num_vars} variables")
        if any(a < 1 for a in gens):
            raise PreconditionError(f"generator degrees must be positive, got {gens}")
        object.__setattr__(self, "gen_degrees", gens)

    @property
    def is_artinian(self) -> bool:
        return len(self.gen_degrees) == self.num_vars

    @property
    def socle_degree(self) -> int:
        """tau = sum(a_j - 1), defined only for Artinian quotients."""
        if not self.is_artinian:
            raise PreconditionError("socle degree needs as many generators as variables")
        return sum(a - 1 for a in self.gen_degrees)


@dataclass(frozen=True)
class Lemma22Result:
    lhs: int
    rhs: int
    holds: bool


def _numerator(ci: CIData, upto: int) -> IntegerPolynomial:
    series = IntegerPolynomial((1,))
    for a in ci.gen_degrees:
        series = (series * IntegerPolynomial((1,) * a)).truncate(upto)
    return series


def hilbert_series(ci: CIData, upto: int) -> list[int]:
    """[HF(0), ..., HF(upto)] from prod(1 + t + ... + t^(a_j - 1)) / (1 - t)^(n - k)."""
    if upto < 0:
        raise PreconditionError(f"degree must be >= 0, got {upto}")
    coeffs = list(_numerator(ci, upto).coefficients)
    coeffs += [0] * (upto + 1 - len(coeffs))
    for _ in range(ci.num_vars - len(ci.gen_degrees)):
        # multiplying by 1 / (1 - t) is a running sum
        running = 0
        for i, c in enumerate(coeffs):
            running += c
            coeffs[i] = running
    return coeffs


def hilbert_function(ci: CIData, i: int) -> int:
    return hilbert_series(ci, i)[i]


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def hilbert_function_bruteforce(ci: CIData, i: int) -> int:
    """Count degree i monomials divisible by no generator y_j^a_j."""
    if i < 0:
        raise PreconditionError(f"degree must be >= 0, got {i}")
    gens = ci.gen_degrees
    return sum(
        1
        for alpha in _compositions(i, ci.num_vars)
        if all(alpha[j] < a for j, a in enumerate(gens))
    )


def hilbert_multiplicity(ci: CIData) -> int:
    """Eventual constant value of HF for a one dimensional quotient (n - 1 generators)."""
    if len(ci.gen_degrees) != ci.num_vars - 1:
        raise PreconditionError("multiplicity needs exactly num_vars - 1 generators")
    return hilbert_function(ci, sum(a - 1 for a in ci.gen_degrees))


def _check_lemma_input(a: Sequence[int]) -> tuple[int, ...]:
    a = tuple(a)
    if not a:
        raise PreconditionError("need at least one non-linear generator (n >= 2)")
    if a[0] < 2:
        raise PreconditionError(f"generator degrees must be >= 2, got {a}")
    if any(x > y for x, y in zip(a, a[1:])):
        raise PreconditionError(f"generator degrees must be sorted, got {a}")
    return a


def socle_degree(a: Sequence[int]) -> int:
    """tau of J = (y_1, y_2^a_2, ..., y_n^a_n): sum(a_i) - (n - 1)."""
    a = _check_lemma_input(a)
    return sum(a) - len(a)


def lemma_ci(a: Sequence[int]) -> CIData:
    """J = (y_1, y_2^a_2, ..., y_n^a_n) in n = len(a) + 1 variables."""
    a = _check_lemma_input(a)
    return CIData(len(a) + 1, (1,) + a)


def lemma22_check(a: Sequence[int]) -> Lemma22Result:
    """sum_{i=a_2}^{tau} HF(T/J, i) against prod(a_i) - C(a_2 + n - 2, n - 1)."""
    a = _check_lemma_input(a)
    n = len(a) + 1
    tau = socle_degree(a)
    ci = lemma_ci(a)
    # an empty window (a_2 > tau) sums to 0
    lhs = sum(hilbert_series(ci, tau)[a[0]:]) if a[0] <= tau else 0
    rhs = prod(a) - comb(a[0] + n - 2, n - 1)
    logger.debug("lemma check a=%s: lhs=%d rhs=%d", a, lhs, rhs)
    return Lemma22Result(lhs, rhs, lhs == rhs)


def initial_segment_check(a: Sequence[int]) -> bool:
    """HF(T/J, i) = C(i + n - 2, n - 2) below a_2, where only y_1 cuts anything."""
    a = _check_lemma_input(a)
    n = len(a) + 1
    values = hilbert_series(lemma_ci(a), a[0] - 1)
    return all(values[i] == comb(i + n - 2, n - 2) for i in range(a[0]))
