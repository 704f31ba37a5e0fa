from fractions import Fraction
import random

import pytest
import sympy

from src.errors import DomainError, PreconditionError, SingularSystemError
from src.exactnum import (
    CyclotomicNumber,
    IntegerPolynomial,
    cyclotomic_polynomial,
    embed_order,
    euler_phi,
    format_fraction,
    matrix_rank,
    parse_fraction,
    solve_linear,
    zeta_power,
)

X = sympy.Symbol("x")


@pytest.mark.parametrize("n", list(range(1, 31)) + [36, 60, 105])
def test_cyclotomic_polynomial_matches_sympy(n):
    expected = [int(c) for c in reversed(sympy.Poly(sympy.cyclotomic_poly(n, X), X).all_coeffs())]
    assert list(cyclotomic_polynomial(n).coefficients) == expected


@pytest.mark.parametrize("n", range(1, 61))
def test_euler_phi_matches_totient(n):
    assert euler_phi(n) == int(sympy.totient(n))
    assert cyclotomic_polynomial(n).degree == euler_phi(n)


def test_cyclotomic_polynomial_rejects_zero():
    with pytest.raises(DomainError):
        cyclotomic_polynomial(0)


def test_integer_polynomial_division_and_str():
    q, r = divmod(IntegerPolynomial((-1, 0, 0, 1)), IntegerPolynomial((-1, 1)))
    assert q == IntegerPolynomial((1, 1, 1))
    assert r.coefficients == ()
    assert str(IntegerPolynomial((1, 0, -1))) == "-x^2 + 1"
    assert IntegerPolynomial((1, 2, 3))(2) == 17
    with pytest.raises(DomainError):
        divmod(IntegerPolynomial((1, 1)), IntegerPolynomial((1, 2)))


@pytest.mark.parametrize("n", [3, 4, 5, 6, 8, 9, 12, 15])
def test_reduction_matches_sympy_remainder(n):
    rng = random.Random(n)
    residue = [rng.randint(-9, 9) for _ in range(2 * n)]
    phi = sympy.Poly(sympy.cyclotomic_poly(n, X), X)
    rem = sympy.Poly(list(reversed(residue)), X).rem(phi)
    expected = [Fraction(int(c)) for c in reversed(rem.all_coeffs())] if not rem.is_zero else []
    expected += [Fraction(0)] * (euler_phi(n) - len(expected))
    assert list(CyclotomicNumber.from_residue(n, residue).coeffs) == expected


def test_zeta_power_reduces_modulo_phi():
    assert zeta_power(6, 4).coeffs == (Fraction(0), Fraction(-1))
    assert zeta_power(5, 5) == CyclotomicNumber.one(5)
    assert zeta_power(7, -1) == zeta_power(7, 6)


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6, 12])
def test_roots_of_unity_sum_to_zero(n):
    total = CyclotomicNumber.zero(n)
    for k in range(n):
        total = total + zeta_power(n, k)
    assert total.is_zero()


def test_field_arithmetic():
    z = zeta_power(5, 1)
    a = z * 3 + Fraction(1, 2)
    assert a * a.inverse() == CyclotomicNumber.one(5)
    assert (a / a) == CyclotomicNumber.one(5)
    assert z ** 5 == CyclotomicNumber.one(5)
    assert z ** -1 == zeta_power(5, 4)
    assert (1 - z) + z == CyclotomicNumber.one(5)
    assert (-z).coeffs == tuple(-c for c in z.coeffs)


def test_zero_has_no_inverse():
    with pytest.raises(DomainError):
        CyclotomicNumber.zero(4).inverse()
    with pytest.raises(DomainError):
        zeta_power(3, 1) / 0


def test_embedding_between_orders():
    assert embed_order(zeta_power(3, 1), 12) == zeta_power(12, 4)
    assert zeta_power(3, 1) + zeta_power(4, 1) == zeta_power(12, 4) + zeta_power(12, 3)
    with pytest.raises(DomainError):
        embed_order(zeta_power(5, 1), 12)


def test_as_root_multiple():
    assert (zeta_power(6, 4) * Fraction(3, 2)).as_root_multiple() == (Fraction(-3, 2), 1)
    assert (CyclotomicNumber.one(3) + zeta_power(3, 1)).as_root_multiple() == (Fraction(-1), 2)
    assert (CyclotomicNumber.one(5) + zeta_power(5, 1)).as_root_multiple() is None


def test_json_forms():
    compact = zeta_power(4, 3) * Fraction(2, 7)
    # 2/7 * zeta_4^3 is -2/7 * zeta_4, the smaller exponent wins
    assert compact.to_json() == {"rational": "-2/7", "zeta_exp": 1}
    assert CyclotomicNumber.from_json(compact.to_json(), order=4) == compact
    general = CyclotomicNumber.one(5) + zeta_power(5, 1)
    assert general.to_json()["order"] == 5
    assert CyclotomicNumber.from_json(general.to_json()) == general


def test_fraction_text():
    assert format_fraction(3) == "3/1"
    assert format_fraction(Fraction(-1, 24)) == "-1/24"
    assert parse_fraction("-1/24") == Fraction(-1, 24)
    with pytest.raises(DomainError):
        parse_fraction("1/0")
    with pytest.raises(DomainError):
        parse_fraction("one")


def test_matrix_rank():
    assert matrix_rank([[1, 2], [2, 4]]) == 1
    assert matrix_rank([[1, 2, 3], [4, 5, 6], [7, 8, 10]]) == 3
    assert matrix_rank([[0, 0], [0, 0]]) == 0
    assert matrix_rank([]) == 0
    assert matrix_rank([[Fraction(1, 2), 1], [1, 2]]) == 1


def test_matrix_rank_matches_sympy():
    rng = random.Random(7)
    for _ in range(20):
        rows = [[rng.randint(-2, 2) for _ in range(5)] for _ in range(4)]
        assert matrix_rank(rows) == sympy.Matrix(rows).rank()


def test_solve_linear_rational_and_cyclotomic():
    assert solve_linear([[2, 1], [1, 3]], [3, 5]) == [Fraction(4, 5), Fraction(7, 5)]
    one, minus = CyclotomicNumber.one(2), zeta_power(2, 1)
    x = solve_linear([[one, one], [one, minus]], [CyclotomicNumber.zero(2), CyclotomicNumber.rational(2, 2)])
    assert x == [CyclotomicNumber.one(2), -CyclotomicNumber.one(2)]


def test_solve_linear_errors():
    with pytest.raises(SingularSystemError):
        solve_linear([[1, 2], [2, 4]], [1, 2])
    with pytest.raises(PreconditionError):
        solve_linear([[1, 2, 3], [4, 5, 6]], [1, 2])


def random_element(rng: random.Random, order: int) -> CyclotomicNumber:
    residue = [Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(order)]
    return CyclotomicNumber.from_residue(order, residue)


@pytest.mark.parametrize("order,target", [(2, 6), (3, 12), (4, 12), (5, 15), (6, 18), (8, 24)])
def test_embedding_is_a_field_homomorphism(order, target):
    rng = random.Random(order * target)
    for _ in range(20):
        a, b = random_element(rng, order), random_element(rng, order)
        assert embed_order(a * b, target) == embed_order(a, target) * embed_order(b, target)
        assert embed_order(a + b, target) == embed_order(a, target) + embed_order(b, target)
        if not a.is_zero():
            assert a * a.inverse() == CyclotomicNumber.one(order)
            assert embed_order(a, target).inverse() == embed_order(a.inverse(), target)
