import json
from fractions import Fraction
from itertools import product

import pytest
import sympy

from src.errors import DomainError, ParseError, PreconditionError
from src.exactnum import CyclotomicNumber, matrix_rank, zeta_power
from src.monomial import CanonicalMonomial, Monomial, catalecticant_rank, parse_monomial, partitions, perp_generators
from src.waring import (
    Decomposition,
    MultiCycloPoly,
    annihilates,
    apply_differential,
    catalecticant_matrix,
    cyclotomic_order,
    decompose,
    decompose_canonical,
    decompose_linear_product,
    decomposition_points,
    expand_power_sum,
    expand_product,
    from_json,
    gamma_closed_form,
    ideal_annihilates,
    multinomial,
    multinomial_table,
    parse_linear_forms,
    point_ideal_generators,
    point_ideal_in_perp,
    solve_gamma_system,
    to_document,
    to_json,
    verify,
    verify_linear_product,
)
from src.waring.document import wide_int


def test_points_and_order():
    c = CanonicalMonomial.of(1, 2, 3)
    assert cyclotomic_order(c) == 12
    points = decomposition_points(c)
    assert len(points) == 12
    assert points[:4] == [(0, 0, 0), (0, 0, 3), (0, 0, 6), (0, 0, 9)]
    assert points[4] == (0, 4, 0)
    assert cyclotomic_order(CanonicalMonomial.of(4)) == 1


def test_point_ideal_sits_in_perp():
    c = CanonicalMonomial.of(1, 2)
    assert point_ideal_generators(c) == [((0, 3), (3, 0))]
    for exps in [(1, 2), (2, 2, 3), (1, 1, 4, 5)]:
        assert point_ideal_in_perp(CanonicalMonomial(exps))


def test_multinomials():
    assert multinomial((1, 1, 1)) == 6
    assert multinomial((2, 0, 3)) == 10
    table = multinomial_table(3, 2)
    assert [alpha for alpha, _ in table] == [(3, 0), (2, 1), (1, 2), (0, 3)]
    assert sum(m for _, m in multinomial_table(4, 3)) == 3**4


def test_three_variable_identity():
    dec = decompose(parse_monomial("x1*x2*x3"))
    assert dec.rank == 4
    assert dec.cyclotomic_order == 2
    signed = {
        (t.gamma_rational * (-1) ** t.gamma_zeta_exp, tuple((-1) ** e for e in t.form_exponents))
        for t in dec.terms
    }
    assert signed == {
        (Fraction(1, 24), (1, 1, 1)),
        (Fraction(-1, 24), (1, 1, -1)),
        (Fraction(-1, 24), (1, -1, 1)),
        (Fraction(1, 24), (1, -1, -1)),
    }


def test_three_variable_identity_symbolically():
    x = sympy.symbols("x1:4")
    dec = decompose(parse_monomial("x1*x2*x3"))
    total = sum(
        sympy.Rational(t.gamma_rational.numerator, t.gamma_rational.denominator)
        * (-1) ** t.gamma_zeta_exp
        * sum((-1) ** e * xi for e, xi in zip(t.form_exponents, x)) ** 3
        for t in dec.terms
    )
    assert sympy.expand(total) == x[0] * x[1] * x[2]


def test_pure_power_has_one_term():
    dec = decompose(parse_monomial("x4^5"))
    assert dec.rank == 1
    assert dec.terms[0].gamma_rational == 1
    assert dec.terms[0].gamma_zeta_exp == 0
    assert dec.raw_variable_map == (3,)
    assert verify(dec)


def _closed_gamma(c, point):
    rational, exp = gamma_closed_form(c, point)
    return zeta_power(cyclotomic_order(c), exp) * rational


@pytest.mark.parametrize("exps", [(1, 1), (1, 2), (2, 2), (1, 1, 3), (2, 3, 3)])
def test_gamma_closed_form_matches_system(exps):
    c = CanonicalMonomial(exps)
    points = decomposition_points(c)
    assert solve_gamma_system(c, points) == [_closed_gamma(c, p) for p in points]


def test_gamma_closed_form_rejects_bad_points():
    c = CanonicalMonomial.of(1, 1, 2)
    with pytest.raises(DomainError):
        gamma_closed_form(c, (1, 0, 0))
    # zeta_6 is not a square root of unity
    with pytest.raises(DomainError):
        gamma_closed_form(c, (0, 1, 0))
    with pytest.raises(DomainError):
        gamma_closed_form(c, (0, 0))


def test_verify_detects_tampering():
    dec = decompose(parse_monomial("x1*x2^2*x3^2"))
    assert verify(dec)
    flipped = (dec.terms[0].negated(dec.cyclotomic_order),) + dec.terms[1:]
    assert not verify(Decomposition(dec.monomial, dec.cyclotomic_order, flipped))
    assert not verify(Decomposition(dec.monomial, dec.cyclotomic_order, ()))
    assert not verify(Decomposition(dec.monomial, dec.cyclotomic_order, dec.terms[:-1]))


def test_parallel_expansion_is_identical():
    dec = decompose_canonical(CanonicalMonomial.of(1, 2, 3))
    serial = expand_power_sum(dec)
    parallel = expand_power_sum(dec, jobs=2, chunk_size=3)
    assert parallel == serial
    assert parallel.is_monomial((1, 2, 3))


def test_multi_cyclo_poly_is_homogeneous():
    with pytest.raises(ValueError):
        MultiCycloPoly.from_rational(1, {(1, 0): 1, (0, 2): 1})
    p = MultiCycloPoly.from_rational(2, {(1, 1): 0, (2, 0): Fraction(1, 2)})
    assert len(p) == 1
    assert p == MultiCycloPoly.from_rational(4, {(2, 0): Fraction(1, 2)})


def test_apply_differential():
    assert apply_differential((1, 0), (2, 1)) == (2, (1, 1))
    assert apply_differential((2, 1), (2, 1)) == (2, (0, 0))
    assert apply_differential((3, 0), (2, 1)) == (0, None)
    with pytest.raises(PreconditionError):
        apply_differential((1,), (1, 1))


@pytest.mark.parametrize("d", range(1, 7))
def test_differentials_below_the_exponents_survive(d):
    for n in range(1, 4):
        for p in partitions(d, n):
            b = p.parts
            for alpha in product(*(range(e + 1) for e in b)):
                coefficient, rest = apply_differential(alpha, b)
                assert coefficient != 0, (alpha, b)
                assert rest == tuple(e - a for a, e in zip(alpha, b))
                assert not annihilates(alpha, b)


def test_perp_generators_annihilate():
    c = CanonicalMonomial.of(1, 2, 4)
    assert ideal_annihilates(perp_generators(c), c)
    assert not annihilates((1, 0, 0), c.exponents)


@pytest.mark.parametrize("exps", [(1, 1, 1), (1, 2, 2), (2, 2, 3), (1, 1, 1, 2)])
def test_catalecticant_matrix_rank(exps):
    c = CanonicalMonomial(exps)
    for a in range(c.degree + 1):
        assert matrix_rank(catalecticant_matrix(c, a)) == catalecticant_rank(c, a)
    with pytest.raises(PreconditionError):
        catalecticant_matrix(c, c.degree + 1)


def test_document_layout():
    dec = decompose(parse_monomial("x1^2*x2"), source="x1^2*x2")
    doc = json.loads(to_json(dec))
    assert list(doc) == [
        "input", "canonical_exponents", "variable_map", "degree", "rank", "cyclotomic_order", "terms",
    ]
    assert doc["canonical_exponents"] == [1, 2]
    assert doc["variable_map"] == [2, 1]
    assert doc["cyclotomic_order"] == 3
    assert doc["terms"][0] == {"gamma": {"rational": "1/9", "zeta_exp": 0}, "form": [0, 0]}
    back = from_json(to_json(dec))
    assert back == dec
    assert to_document(back) == to_document(dec)


def test_wide_int():
    assert wide_int(2**53 - 1) == 2**53 - 1
    assert wide_int(2**53) == str(2**53)


@pytest.mark.parametrize(
    "mutate",
    [
        lambda d: d.update(rank=5),
        lambda d: d.update(degree=7),
        lambda d: d.update(extra=1),
        lambda d: d.pop("terms"),
        lambda d: d["terms"][0]["gamma"].update(rational="1/0"),
        lambda d: d.update(canonical_exponents=[2, 1]),
        lambda d: d.update(cyclotomic_order=0),
        lambda d: d.update(cyclotomic_order=10**12),
        lambda d: d.update(cyclotomic_order=6),
        lambda d: d["terms"][1].update(form=[0, 1, 2]),
        lambda d: d["terms"][1].update(form=[0]),
        lambda d: d["terms"][1].update(form=[1, 1]),
    ],
)
def test_malformed_documents(mutate):
    doc = to_document(decompose(parse_monomial("x1*x2^2"))).model_dump()
    mutate(doc)
    with pytest.raises(ParseError):
        from_json(json.dumps(doc))


def test_from_json_rejects_non_json():
    with pytest.raises(ParseError):
        from_json("not json")


def test_parse_linear_forms():
    assert parse_linear_forms("1,1;1,-1") == ((1, 1), (1, -1))
    assert parse_linear_forms("1/2, 3") == ((Fraction(1, 2), 3),)
    for bad in ["", "1,a", "1,1;1"]:
        with pytest.raises(ParseError):
            parse_linear_forms(bad)


def test_linear_product_difference_of_squares():
    cert = decompose_linear_product(parse_linear_forms("1,1;1,-1"), (1, 1))
    assert cert.rank == 2
    assert cert.degree == 2
    assert expand_product(cert.forms, cert.exponents) == {(2, 0): 1, (0, 2): -1}
    assert verify_linear_product(cert)


def test_linear_product_three_forms():
    forms = parse_linear_forms("1,0,1;0,1,1;1,1,0")
    cert = decompose_linear_product(forms, (2, 1, 1))
    assert cert.rank == 6
    assert cert.base.cyclotomic_order == 6
    assert all(isinstance(g, CyclotomicNumber) for g in cert.gammas)
    assert verify_linear_product(cert)


def test_linear_product_preconditions():
    with pytest.raises(PreconditionError, match="dependent"):
        decompose_linear_product(parse_linear_forms("1,1;2,2"), (1, 1))
    with pytest.raises(PreconditionError):
        decompose_linear_product(parse_linear_forms("1,1;1,-1"), (1, 1, 1))


def test_decompose_rejects_constant():
    with pytest.raises(DomainError):
        decompose(Monomial((0, 0)))
