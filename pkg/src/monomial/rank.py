"""Closed-form rank formulas and bounds for monomials and pure-power ideals."""
from __future__ import annotations

import logging
from math import comb, prod
from typing import NamedTuple, Sequence

from src.errors import PreconditionError
from src.monomial.model import CanonicalMonomial, Monomial, Partition, normalize

logger = logging.getLogger(__name__)


class RankBounds(NamedTuple):
    lower: int
    upper: int


def waring_rank(c: CanonicalMonomial) -> int:
    """prod_{i>=2} (b_i + 1); 1 for a pure power."""
    return prod(b + 1 for b in c.exponents[1:])


def multiplicity_lower_bound(a: Sequence[int]) -> int:
    """Lower bound prod_{i>=2} a_i on the number of points inside (y_1^a_1, ..., y_n^a_n)."""
    a = tuple(a)
    if len(a) < 2:
        raise PreconditionError("multiplicity bound needs at least two generators")
    if any(x < 2 for x in a):
        raise PreconditionError(f"generator degrees must be >= 2, got {a}")
    if any(x > y for x, y in zip(a, a[1:])):
        raise PreconditionError(f"generator degrees must be sorted, got {a}")
    return prod(a[1:])


def ci_multiplicity(degrees: Sequence[int]) -> int:
    """Multiplicity of a pure-power complete intersection: the product of its degrees."""
    if not degrees:
        raise PreconditionError("complete intersection needs at least one generator")
    if any(d < 1 for d in degrees):
        raise PreconditionError(f"generator degrees must be positive, got {tuple(degrees)}")
    return prod(degrees)


def non_radical_multiplicity(a: Sequence[int]) -> RankBounds:
    """(multiplicity of (y_1^a_1..y_{n-1}^a_{n-1}), radical bound prod_{i>=2} a_i).

    The first can undercut the second, which is why the bound needs a radical ideal.
    """
    bound = multiplicity_lower_bound(a)
    return RankBounds(lower=ci_multiplicity(tuple(a)[:-1]), upper=bound)


def coprime_rank_bounds(ms: Sequence[Monomial]) -> RankBounds:
    """rk(M_i) <= rk(M_1 + ... + M_r) <= rk(M_1 * ... * M_r) for pairwise coprime M_i."""
    if not ms:
        raise PreconditionError("coprime bounds need at least one monomial")
    width = max(m.num_vars for m in ms)
    ms = [m.padded(width) for m in ms]
    degrees = {m.degree for m in ms}
    if len(degrees) != 1:
        raise PreconditionError(f"all monomials must share one degree, got {sorted(degrees)}")
    if 0 in degrees:
        raise PreconditionError("monomials must have positive degree")
    seen: set[int] = set()
    for m in ms:
        shared = seen & m.support
        if shared:
            raise PreconditionError(
                f"monomials are not coprime: x{min(shared) + 1} appears twice"
            )
        seen |= m.support
    lower = max(waring_rank(normalize(m)) for m in ms)
    product = ms[0]
    for m in ms[1:]:
        product = product * m
    upper = waring_rank(normalize(product))
    logger.debug("coprime bounds for %d monomials: [%d, %d]", len(ms), lower, upper)
    return RankBounds(lower, upper)


def generic_rank_naive(num_vars: int, d: int) -> int:
    """ceil(C(d + num_vars - 1, d) / num_vars), exceptional cases not special-cased."""
    if num_vars < 1 or d < 1:
        raise PreconditionError(f"need num_vars >= 1 and d >= 1, got ({num_vars}, {d})")
    return -(-comb(d + num_vars - 1, d) // num_vars)


def trivial_rank_bound(num_vars: int, d: int) -> int:
    """Every degree d form in num_vars variables is a sum of C(d + num_vars - 1, d) powers."""
    if num_vars < 1 or d < 1:
        raise PreconditionError(f"need num_vars >= 1 and d >= 1, got ({num_vars}, {d})")
    return comb(d + num_vars - 1, d)


def secant_bound(partition: Partition, n: int) -> int:
    """Secant index r = prod_{i>=2} (d_i + 1) containing the forms factoring as the partition."""
    if len(partition) != n:
        raise PreconditionError(f"partition has {len(partition)} parts, expected {n}")
    return prod(p + 1 for p in partition.parts[1:])
