"""Cyclotomic fields - exact arithmetic in Q(zeta_N), elements reduced modulo Phi_N."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable

from src.errors import DomainError
from src.exactnum.polynomial import (
    cyclotomic_polynomial,
    poly_ext_gcd,
    poly_mod,
    poly_mul,
)

Scalar = int | Fraction


def format_fraction(value: Scalar) -> str:
    """Always "p/q", so integers read back as exact rationals."""
    f = Fraction(value)
    return f"{f.numerator}/{f.denominator}"


def parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as e:
        raise DomainError(f"not a rational number: {text!r}") from e


@dataclass(frozen=True)
class CyclotomicNumber:
    """Element sum(coeffs[i] * zeta_N^i) of Q(zeta_N).

    coeffs always has length phi(N) and is the unique reduced residue modulo Phi_N,
    so structural equality is field equality for elements of the same order.
    """

    order: int
    coeffs: tuple[Fraction, ...]

    @classmethod
    def from_residue(cls, order: int, residue: Iterable[Scalar]) -> CyclotomicNumber:
        """Reduce an arbitrary polynomial in zeta_N (index = power) into canonical form."""
        if order < 1:
            raise DomainError(f"cyclotomic order must be positive, got {order}")
        phi = cyclotomic_polynomial(order)
        rem = poly_mod(list(residue), phi.coefficients)
        width = phi.degree
        padded = [Fraction(c) for c in rem] + [Fraction(0)] * (width - len(rem))
        return cls(order, tuple(padded))

    @classmethod
    def rational(cls, value: Scalar, order: int = 1) -> CyclotomicNumber:
        return cls.from_residue(order, [value])

    @classmethod
    def zero(cls, order: int = 1) -> CyclotomicNumber:
        return cls.from_residue(order, [])

    @classmethod
    def one(cls, order: int = 1) -> CyclotomicNumber:
        return cls.from_residue(order, [1])

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def lift(self, order: int) -> CyclotomicNumber:
        return embed_order(self, order)

    def _common(self, other: CyclotomicNumber | Scalar) -> tuple[CyclotomicNumber, CyclotomicNumber]:
        if not isinstance(other, CyclotomicNumber):
            other = CyclotomicNumber.rational(other, self.order)
        if other.order == self.order:
            return self, other
        m = lcm(self.order, other.order)
        return self.lift(m), other.lift(m)

    def __add__(self, other: CyclotomicNumber | Scalar) -> CyclotomicNumber:
        a, b = self._common(other)
        return CyclotomicNumber(a.order, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __sub__(self, other: CyclotomicNumber | Scalar) -> CyclotomicNumber:
        a, b = self._common(other)
        return CyclotomicNumber(a.order, tuple(x - y for x, y in zip(a.coeffs, b.coeffs)))

    def __rsub__(self, other: Scalar) -> CyclotomicNumber:
        return (-self) + other

    def __neg__(self) -> CyclotomicNumber:
        return CyclotomicNumber(self.order, tuple(-x for x in self.coeffs))

    def __mul__(self, other: CyclotomicNumber | Scalar) -> CyclotomicNumber:
        if not isinstance(other, CyclotomicNumber):
            f = Fraction(other)
            return CyclotomicNumber(self.order, tuple(x * f for x in self.coeffs))
        a, b = self._common(other)
        return CyclotomicNumber.from_residue(a.order, poly_mul(a.coeffs, b.coeffs))

    __rmul__ = __mul__

    def inverse(self) -> CyclotomicNumber:
        """Inverse via extended Euclid against Phi_N."""
        if self.is_zero():
            raise DomainError("zero has no inverse in a cyclotomic field")
        phi = cyclotomic_polynomial(self.order)
        g, s, _ = poly_ext_gcd(self.coeffs, phi.coefficients)
        if g != [1]:
            raise DomainError(f"element not invertible modulo Phi_{self.order}")
        return CyclotomicNumber.from_residue(self.order, s)

    def __truediv__(self, other: CyclotomicNumber | Scalar) -> CyclotomicNumber:
        if not isinstance(other, CyclotomicNumber):
            if other == 0:
                raise DomainError("division by zero")
            return self * (1 / Fraction(other))
        return self * other.inverse()

    def __pow__(self, k: int) -> CyclotomicNumber:
        if k < 0:
            return self.inverse() ** (-k)
        result = CyclotomicNumber.one(self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def as_root_multiple(self) -> tuple[Fraction, int] | None:
        """(r, e) with self == r * zeta_N^e and e minimal, or None."""
        if self.is_zero():
            return Fraction(0), 0
        for e in range(self.order):
            shifted = self * zeta_power(self.order, -e)
            if shifted.is_rational():
                return shifted.coeffs[0], e
        return None

    def to_json(self) -> dict:
        compact = self.as_root_multiple()
        if compact is not None:
            return {"rational": format_fraction(compact[0]), "zeta_exp": compact[1]}
        return {"order": self.order, "coeffs": [format_fraction(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict, order: int | None = None) -> CyclotomicNumber:
        if "coeffs" in data:
            return cls.from_residue(int(data["order"]), [parse_fraction(c) for c in data["coeffs"]])
        n = order or int(data.get("order", 1))
        return zeta_power(n, int(data["zeta_exp"])) * parse_fraction(data["rational"])

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                z = f"z{self.order}" if i == 1 else f"z{self.order}^{i}"
                terms.append(z if c == 1 else f"{c}*{z}")
        return " + ".join(terms) if terms else "0"


def zeta_power(order: int, k: int) -> CyclotomicNumber:
    """zeta_N^(k mod N) in reduced form."""
    if order < 1:
        raise DomainError(f"cyclotomic order must be positive, got {order}")
    k %= order
    return CyclotomicNumber.from_residue(order, [0] * k + [1])


def embed_order(a: CyclotomicNumber, order: int) -> CyclotomicNumber:
    """Same element in Q(zeta_M) using zeta_N = zeta_M^(M/N)."""
    if order < 1 or order % a.order != 0:
        raise DomainError(f"cannot embed Q(zeta_{a.order}) into Q(zeta_{order})")
    if order == a.order:
        return a
    step = order // a.order
    residue: list[Fraction] = [Fraction(0)] * (step * (len(a.coeffs) - 1) + 1)
    for i, c in enumerate(a.coeffs):
        residue[i * step] = c
    return CyclotomicNumber.from_residue(order, residue)