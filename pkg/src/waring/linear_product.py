"""Products of independent linear forms - substitute the forms into a monomial decomposition."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from src.errors import ParseError, PreconditionError
from src.exactnum import CyclotomicNumber, matrix_rank, zeta_power
from src.monomial import Monomial
from src.waring.decompose import Decomposition, decompose
from src.waring.expand import MultiCycloPoly, expand_linear_powers

logger = logging.getLogger(__name__)

LinearForm = tuple[Fraction, ...]


@dataclass(frozen=True)
class LinearProductCertificate:
    """L_1^b_1 * ... * L_n^b_n = sum_j gammas[j] * (sum_v term_forms[j][v] x_v)^d."""

    forms: tuple[LinearForm, ...]
    exponents: tuple[int, ...]
    base: Decomposition
    gammas: tuple[CyclotomicNumber, ...]
    term_forms: tuple[tuple[CyclotomicNumber, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.gammas)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def num_vars(self) -> int:
        return len(self.forms[0])


def parse_linear_forms(text: str) -> tuple[LinearForm, ...]:
    """Parse "1,1;1,-1" as (x1 + x2, x1 - x2). Rows are forms, entries are rationals."""
    rows = [r for r in (text or "").replace(" ", "").split(";") if r]
    if not rows:
        raise ParseError("no linear forms given")
    try:
        forms = tuple(tuple(Fraction(v) for v in row.split(",")) for row in rows)
    except (ValueError, ZeroDivisionError) as e:
        raise ParseError(f"bad linear form list {text!r}: {e}") from e
    if len({len(f) for f in forms}) != 1:
        raise ParseError("all linear forms need the same number of coefficients")
    return forms


def decompose_linear_product(forms: Sequence[Sequence[Fraction | int]], b: Sequence[int]) -> LinearProductCertificate:
    """Decompose prod L_i^b_i for linearly independent L_i via the monomial x^b."""
    forms = tuple(tuple(Fraction(c) for c in f) for f in forms)
    b = tuple(int(e) for e in b)
    if len(forms) != len(b):
        raise PreconditionError(f"{len(forms)} forms but {len(b)} exponents")
    if not forms or len({len(f) for f in forms}) != 1:
        raise PreconditionError("linear forms must share one ambient variable count")
    if matrix_rank(forms) != len(forms):
        raise PreconditionError("linear forms are linearly dependent")
    base = decompose(Monomial(b))
    order = base.cyclotomic_order
    chosen = [forms[k] for k in base.raw_variable_map]
    num_vars = len(forms[0])
    gammas = []
    term_forms = []
    for term in base.terms:
        coeffs = []
        for v in range(num_vars):
            residue = CyclotomicNumber.zero(order)
            for e, form in zip(term.form_exponents, chosen):
                if form[v]:
                    residue = residue + zeta_power(order, e) * form[v]
            coeffs.append(residue)
        gammas.append(term.gamma(order))
        term_forms.append(tuple(coeffs))
    logger.debug("linear product certificate: %d terms over Q(zeta_%d)", len(gammas), order)
    return LinearProductCertificate(forms, b, base, tuple(gammas), tuple(term_forms))


def expand_product(forms: Sequence[LinearForm], b: Sequence[int]) -> dict[tuple[int, ...], Fraction]:
    """prod L_i^b_i with rational coefficients, zero coefficients dropped."""
    n = len(forms[0])
    poly: dict[tuple[int, ...], Fraction] = {(0,) * n: Fraction(1)}
    for form, e in zip(forms, b):
        for _ in range(e):
            nxt: dict[tuple[int, ...], Fraction] = {}
            for alpha, c in poly.items():
                for v, coeff in enumerate(form):
                    if coeff:
                        key = alpha[:v] + (alpha[v] + 1,) + alpha[v + 1:]
                        nxt[key] = nxt.get(key, Fraction(0)) + c * coeff
            poly = {k: v for k, v in nxt.items() if v}
    return poly


def verify_linear_product(cert: LinearProductCertificate) -> bool:
    order = cert.base.cyclotomic_order
    expanded = expand_linear_powers(cert.gammas, cert.term_forms, cert.degree, order)
    return expanded == MultiCycloPoly.from_rational(order, expand_product(cert.forms, cert.exponents))
