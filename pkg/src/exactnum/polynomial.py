"""Dense univariate polynomials - exact integer polynomials and rational coefficient helpers."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from src.errors import DomainError

logger = logging.getLogger(__name__)


def trim(coeffs: Sequence) -> list:
    """Drop trailing zero coefficients. Index is degree."""
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return out


def poly_add(a: Sequence, b: Sequence) -> list:
    n = max(len(a), len(b))
    return trim(
        (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)
    )


def poly_sub(a: Sequence, b: Sequence) -> list:
    n = max(len(a), len(b))
    return trim(
        (a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)
    )


def poly_mul(a: Sequence, b: Sequence) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return trim(out)


def poly_divmod(a: Sequence, b: Sequence) -> tuple[list, list]:
    """Long division a = q*b + r with deg r < deg b.

    Integer inputs stay integer when b is monic; otherwise coefficients become Fractions.
    """
    b = trim(b)
    if not b:
        raise DomainError("polynomial division by zero")
    rem = trim(a)
    if len(rem) < len(b):
        return [], rem
    lead = b[-1]
    quot = [0] * (len(rem) - len(b) + 1)
    while len(rem) >= len(b):
        shift = len(rem) - len(b)
        c = rem[-1] if lead == 1 else Fraction(rem[-1]) / lead
        quot[shift] = c
        for i, y in enumerate(b):
            rem[shift + i] -= c * y
        rem = trim(rem)
    return trim(quot), rem


def poly_mod(a: Sequence, b: Sequence) -> list:
    return poly_divmod(a, b)[1]


def poly_ext_gcd(a: Sequence, b: Sequence) -> tuple[list, list, list]:
    """Extended Euclid over Q[x]: returns (g, s, t) with s*a + t*b = g, g monic."""
    r0, r1 = [Fraction(c) for c in trim(a)], [Fraction(c) for c in trim(b)]
    s0, s1 = [Fraction(1)], []
    t0, t1 = [], [Fraction(1)]
    while r1:
        q, r = poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, poly_sub(s0, poly_mul(q, s1))
        t0, t1 = t1, poly_sub(t0, poly_mul(q, t1))
    if not r0:
        return [], s0, t0
    lead = r0[-1]
    return (
        [c / lead for c in r0],
        [c / lead for c in s0],
        [c / lead for c in t0],
    )


@dataclass(frozen=True)
class IntegerPolynomial:
    """Polynomial with exact integer coefficients, coefficients[i] is the x^i coefficient."""

    coefficients: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "coefficients", tuple(trim(int(c) for c in self.coefficients)))

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> IntegerPolynomial:
        return cls((0,) * degree + (coeff,))

    @property
    def degree(self) -> int:
        """Degree, -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    @property
    def is_monic(self) -> bool:
        return bool(self.coefficients) and self.coefficients[-1] == 1

    def __add__(self, other: IntegerPolynomial) -> IntegerPolynomial:
        return IntegerPolynomial(poly_add(self.coefficients, other.coefficients))

    def __sub__(self, other: IntegerPolynomial) -> IntegerPolynomial:
        return IntegerPolynomial(poly_sub(self.coefficients, other.coefficients))

    def __mul__(self, other: IntegerPolynomial) -> IntegerPolynomial:
        return IntegerPolynomial(poly_mul(self.coefficients, other.coefficients))

    def __divmod__(self, other: IntegerPolynomial) -> tuple[IntegerPolynomial, IntegerPolynomial]:
        if not other.is_monic:
            raise DomainError("integer division requires a monic divisor")
        q, r = poly_divmod(self.coefficients, other.coefficients)
        return IntegerPolynomial(q), IntegerPolynomial(r)

    def __call__(self, x: int | Fraction) -> int | Fraction:
        acc: int | Fraction = 0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def truncate(self, degree: int) -> IntegerPolynomial:
        """Drop every term above the given degree."""
        return IntegerPolynomial(self.coefficients[: degree + 1])

    def __str__(self) -> str:
        parts = []
        for k in range(len(self.coefficients) - 1, -1, -1):
            c = self.coefficients[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                var = "x" if k == 1 else f"x^{k}"
                body = var if mag == 1 else f"{mag}*{var}"
            parts.append((sign, body))
        if not parts:
            return "0"
        head_sign, head = parts[0]
        text = ("-" if head_sign == "-" else "") + head
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


def euler_phi(n: int) -> int:
    """Euler totient by trial division."""
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> IntegerPolynomial:
    """Phi_n by exact division of x^n - 1 by Phi_d over the proper divisors d of n."""
    if n < 1:
        raise DomainError(f"cyclotomic order must be positive, got {n}")
    acc = IntegerPolynomial.monomial(n) - IntegerPolynomial((1,))
    for d in range(1, n):
        if n % d == 0:
            acc, rem = divmod(acc, cyclotomic_polynomial(d))
            if rem.coefficients:
                raise DomainError(f"Phi_{d} does not divide x^{n} - 1")
    logger.debug("Phi_%d has degree %d", n, acc.degree)
    return acc
