"""End-to-end checks of the published identities, tables and bounds."""
import json
import random
from fractions import Fraction
from itertools import combinations_with_replacement

import pytest

from src.exactnum import zeta_power
from src.hilbert import hilbert_function_bruteforce, hilbert_series, lemma22_check, lemma_ci
from src.monomial import (
    CanonicalMonomial,
    Monomial,
    catalecticant_ranks,
    coprime_rank_bounds,
    extremal_rank_bruteforce,
    extremal_rank_ternary,
    generic_rank_naive,
    ideal_intersect,
    monomial_perp,
    normalize,
    partitions,
    perp_generators,
    rank_table,
    waring_rank,
)
from src.waring import (
    annihilates,
    cyclotomic_order,
    decompose_canonical,
    decomposition_points,
    gamma_closed_form,
    solve_gamma_system,
    verify,
)


def canonical_monomials(max_vars: int, max_degree: int):
    for d in range(1, max_degree + 1):
        for n in range(1, max_vars + 1):
            for p in partitions(d, n):
                yield p.as_canonical()


def random_composition(rng: random.Random, total: int, parts: int) -> list[int]:
    cuts = sorted(rng.sample(range(1, total), parts - 1))
    return [b - a for a, b in zip([0] + cuts, cuts + [total])]


def random_coprime_family(rng: random.Random, max_vars: int, max_degree: int) -> list[Monomial]:
    """Pairwise coprime monomials of one common degree, as raw exponent vectors."""
    n = rng.randint(1, max_vars)
    variables = list(range(n))
    rng.shuffle(variables)
    groups = []
    while variables:
        size = rng.randint(1, len(variables))
        groups.append(variables[:size])
        variables = variables[size:]
    d = rng.randint(max(len(g) for g in groups), max_degree)
    family = []
    for group in groups:
        exps = [0] * n
        for v, e in zip(group, random_composition(rng, d, len(group))):
            exps[v] = e
        family.append(Monomial(tuple(exps)))
    return family


def test_three_variable_identity_verifies_through_cli(cli, tmp_path):
    code, out, _ = cli("decompose", "x1*x2*x3", "--format", "json")
    assert code == 0
    terms = {(t["gamma"]["rational"], t["gamma"]["zeta_exp"], tuple(t["form"])) for t in json.loads(out)["terms"]}
    assert terms == {
        ("1/24", 0, (0, 0, 0)),
        ("1/24", 1, (0, 0, 1)),
        ("1/24", 1, (0, 1, 0)),
        ("1/24", 0, (0, 1, 1)),
    }
    path = tmp_path / "identity.json"
    path.write_text(out, encoding="utf-8")
    assert cli("verify", str(path))[0] == 0


def test_rank_table_reproduction():
    assert [tuple(r) for r in rank_table(7)] == [(3, 4, 4), (4, 5, 6), (5, 7, 9), (6, 10, 12), (7, 12, 16)]


@pytest.mark.parametrize("n", [1, 2, 3, 4])
@pytest.mark.parametrize("m", [1, 2, 3])
def test_uniform_monomial_rank(n, m):
    assert waring_rank(CanonicalMonomial((m,) * n)) == (m + 1) ** (n - 1)


@pytest.mark.parametrize("d", range(1, 11))
def test_every_decomposition_verifies(d):
    for n in range(1, 5):
        for p in partitions(d, n):
            c = p.as_canonical()
            dec = decompose_canonical(c)
            assert dec.rank == waring_rank(c)
            assert verify(dec), c


@pytest.mark.parametrize("d", range(1, 9))
def test_closed_form_gammas_solve_the_system(d):
    for n in range(1, 4):
        for p in partitions(d, n):
            c = p.as_canonical()
            points = decomposition_points(c)
            order = cyclotomic_order(c)
            closed = []
            for point in points:
                rational, exp = gamma_closed_form(c, point)
                closed.append(zeta_power(order, exp) * rational)
            assert solve_gamma_system(c, points) == closed, c


def test_lemma_identity_and_brute_force_counts():
    for k in range(1, 4):
        for a in combinations_with_replacement(range(2, 6), k):
            assert lemma22_check(a).holds, a
            ci = lemma_ci(a)
            tau = sum(a) - len(a)
            values = hilbert_series(ci, tau + 1)
            assert values == [hilbert_function_bruteforce(ci, i) for i in range(tau + 2)], a


def test_ternary_extremal_matches_brute_force():
    for d in range(3, 31):
        assert extremal_rank_ternary(d) == extremal_rank_bruteforce(3, d), d


def test_ternary_ratio_tends_to_three_halves():
    ratio = Fraction(extremal_rank_ternary(601).value, generic_rank_naive(3, 601))
    assert Fraction(145, 100) <= ratio <= Fraction(3, 2)


def test_catalecticant_bound_and_symmetry():
    for c in canonical_monomials(4, 10):
        ranks = catalecticant_ranks(c)
        assert ranks == ranks[::-1], c
        assert max(ranks) <= waring_rank(c), c


def test_perp_ideals_annihilate():
    for c in canonical_monomials(4, 8):
        assert all(annihilates(g, c.exponents) for g in perp_generators(c).generators)
    rng = random.Random(2024)
    for _ in range(200):
        family = random_coprime_family(rng, 4, 8)
        joint = ideal_intersect([monomial_perp(m) for m in family])
        for m in family:
            assert all(annihilates(g, m.exponents) for g in joint.generators)


def test_coprime_bounds_sandwich():
    rng = random.Random(11)
    for _ in range(100):
        family = random_coprime_family(rng, 6, 8)
        bounds = coprime_rank_bounds(family)
        assert bounds.lower <= bounds.upper
    for c in canonical_monomials(3, 6):
        rank = waring_rank(c)
        assert tuple(coprime_rank_bounds([c.to_monomial()])) == (rank, rank)
        assert waring_rank(normalize(c.to_monomial())) == rank
