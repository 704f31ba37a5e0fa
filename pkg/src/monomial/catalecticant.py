"""Catalecticant ranks of monomials - the flattening lower bound for the Waring rank."""
from __future__ import annotations

from src.errors import PreconditionError
from src.monomial.model import CanonicalMonomial


def catalecticant_rank(c: CanonicalMonomial, a: int) -> int:
    """#{alpha <= b componentwise : |alpha| = a}, the rank of the (a, d - a) catalecticant."""
    if not 0 <= a <= c.degree:
        raise PreconditionError(f"catalecticant degree {a} outside 0..{c.degree}")
    # counts[s] = number of alpha over the variables seen so far with |alpha| = s
    counts = [1] + [0] * a
    for b in c.exponents:
        nxt = [0] * (a + 1)
        for s, n in enumerate(counts):
            if n:
                for t in range(min(b, a - s) + 1):
                    nxt[s + t] += n
        counts = nxt
    return counts[a]


def catalecticant_ranks(c: CanonicalMonomial) -> list[int]:
    return [catalecticant_rank(c, a) for a in range(c.degree + 1)]


def catalecticant_bound(c: CanonicalMonomial) -> int:
    """Largest catalecticant rank; never exceeds the Waring rank."""
    return max(catalecticant_ranks(c))
