"""Decomposition documents - the JSON exchange format, validated with pydantic on read."""
from __future__ import annotations

import json
from typing import Any

from pydantic import BaseModel, ConfigDict, ValidationError

from src.errors import DomainError, ParseError, PreconditionError
from src.exactnum import format_fraction, parse_fraction
from src.monomial import CanonicalMonomial
from src.waring.decompose import Decomposition, DecompositionTerm
from src.waring.points import cyclotomic_order

# integers beyond the exactly-representable range of IEEE doubles go out as strings
_SAFE_INT = 2**53


def wide_int(value: int) -> int | str:
    return value if abs(value) < _SAFE_INT else str(value)


class GammaModel(BaseModel):
    model_config = ConfigDict(extra="forbid")
    rational: str
    zeta_exp: int


class TermModel(BaseModel):
    model_config = ConfigDict(extra="forbid")
    gamma: GammaModel
    form: list[int]


class DecompositionDocument(BaseModel):
    """Field order here is the serialized field order."""

    model_config = ConfigDict(extra="forbid")
    input: str
    canonical_exponents: list[int | str]
    variable_map: list[int]
    degree: int | str
    rank: int | str
    cyclotomic_order: int
    terms: list[TermModel]


def to_document(dec: Decomposition) -> DecompositionDocument:
    return DecompositionDocument(
        input=dec.source,
        canonical_exponents=[wide_int(b) for b in dec.monomial.exponents],
        variable_map=[k + 1 for k in dec.raw_variable_map],
        degree=wide_int(dec.degree),
        rank=wide_int(dec.rank),
        cyclotomic_order=dec.cyclotomic_order,
        terms=[
            TermModel(
                gamma=GammaModel(rational=format_fraction(t.gamma_rational), zeta_exp=t.gamma_zeta_exp),
                form=list(t.form_exponents),
            )
            for t in dec.terms
        ],
    )


def to_json(dec: Decomposition, indent: int | None = 2) -> str:
    return json.dumps(to_document(dec).model_dump(), indent=indent)


def from_document(data: dict[str, Any] | DecompositionDocument) -> Decomposition:
    """Rebuild a decomposition; structurally inconsistent documents raise ParseError."""
    try:
        doc = data if isinstance(data, DecompositionDocument) else DecompositionDocument.model_validate(data)
    except ValidationError as e:
        raise ParseError(f"malformed decomposition document: {e.error_count()} error(s)\n{e}") from e
    try:
        exponents = tuple(int(b) for b in doc.canonical_exponents)
        monomial = CanonicalMonomial(exponents, tuple(v - 1 for v in doc.variable_map))
        degree, rank = int(doc.degree), int(doc.rank)
    except (PreconditionError, ValueError) as e:
        raise ParseError(f"malformed decomposition document: {e}") from e
    if degree != monomial.degree:
        raise ParseError(f"degree {degree} does not match exponents {exponents}")
    if rank != len(doc.terms):
        raise ParseError(f"rank {rank} but {len(doc.terms)} terms")
    order = doc.cyclotomic_order
    if order != cyclotomic_order(monomial):
        raise ParseError(f"cyclotomic order {order} does not match exponents {exponents}")
    for t in doc.terms:
        if len(t.form) != monomial.num_vars:
            raise ParseError(f"form {t.form} has {len(t.form)} entries, expected {monomial.num_vars}")
        if t.form[0] != 0:
            raise ParseError(f"form {t.form} must start with exponent 0")
    try:
        terms = tuple(
            DecompositionTerm(
                parse_fraction(t.gamma.rational),
                t.gamma.zeta_exp % order,
                tuple(e % order for e in t.form),
            )
            for t in doc.terms
        )
    except DomainError as e:
        raise ParseError(f"malformed decomposition document: {e}") from e
    return Decomposition(monomial, order, terms, doc.input)


def from_json(text: str) -> Decomposition:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"decomposition is not valid JSON: {e}") from e
    return from_document(data)
