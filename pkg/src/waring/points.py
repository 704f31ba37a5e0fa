"""Decomposition points - the roots-of-unity point set cut out inside the perp ideal."""
from __future__ import annotations

from itertools import product
from math import lcm

from src.monomial import CanonicalMonomial, perp_generators

Point = tuple[int, ...]
Binomial = tuple[tuple[int, ...], tuple[int, ...]]


def cyclotomic_order(c: CanonicalMonomial) -> int:
    """N = lcm_{i>=2} (b_i + 1), 1 for a pure power."""
    return lcm(*(b + 1 for b in c.exponents[1:])) if c.num_vars > 1 else 1


def decomposition_points(c: CanonicalMonomial) -> list[Point]:
    """Points [1 : zeta^e_2 : ... : zeta^e_n] as zeta_N exponents, mixed radix with i=2 slowest."""
    order = cyclotomic_order(c)
    axes = [range(0, order, order // (b + 1)) for b in c.exponents[1:]]
    return [(0,) + tail for tail in product(*axes)]


def point_ideal_generators(c: CanonicalMonomial) -> list[Binomial]:
    """y_i^(b_i+1) - y_1^(b_i+1) for i >= 2, each as (positive term, negative term)."""
    n = c.num_vars
    gens = []
    for i, b in enumerate(c.exponents[1:], start=1):
        head = tuple(b + 1 if k == i else 0 for k in range(n))
        tail = tuple(b + 1 if k == 0 else 0 for k in range(n))
        gens.append((head, tail))
    return gens


def point_ideal_in_perp(c: CanonicalMonomial) -> bool:
    """Both terms of every binomial lie in the perp ideal and every point is a common zero."""
    perp = perp_generators(c)
    if not all(head in perp and tail in perp for head, tail in point_ideal_generators(c)):
        return False
    order = cyclotomic_order(c)
    # at [1 : zeta^e_2 : ...] the binomial for i is zeta^(e_i (b_i + 1)) - 1
    return all(
        (e * (b + 1)) % order == 0
        for point in decomposition_points(c)
        for e, b in zip(point[1:], c.exponents[1:])
    )
