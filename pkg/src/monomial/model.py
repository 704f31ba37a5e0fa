"""Monomial model - raw and canonical exponent vectors, partitions, and the text grammar."""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from src.errors import DomainError, ParseError, PreconditionError

_FACTOR = re.compile(r"x(\d+)(?:\^(\d+))?")
# exponent vectors are dense, so variable labels are bounded
MAX_VARIABLE = 10_000


@dataclass(frozen=True)
class Monomial:
    """x_1^e_1 * ... * x_n^e_n in the user's variable order (0-based positions)."""

    exponents: tuple[int, ...]

    def __post_init__(self) -> None:
        exps = tuple(int(e) for e in self.exponents)
        if not exps:
            raise PreconditionError("a monomial needs at least one variable")
        if any(e < 0 for e in exps):
            raise PreconditionError(f"negative exponent in {exps}")
        object.__setattr__(self, "exponents", exps)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def num_vars(self) -> int:
        return len(self.exponents)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(i for i, e in enumerate(self.exponents) if e)

    def padded(self, num_vars: int) -> Monomial:
        if num_vars < self.num_vars:
            raise PreconditionError(f"cannot shrink {self.num_vars} variables to {num_vars}")
        return Monomial(self.exponents + (0,) * (num_vars - self.num_vars))

    def __mul__(self, other: Monomial) -> Monomial:
        n = max(self.num_vars, other.num_vars)
        a, b = self.padded(n).exponents, other.padded(n).exponents
        return Monomial(tuple(x + y for x, y in zip(a, b)))

    def __str__(self) -> str:
        return format_exponents(self.exponents)


@dataclass(frozen=True)
class CanonicalMonomial:
    """Positive exponents sorted non-decreasing, with the way back to the raw variables.

    permutation[k] is the raw 0-based variable index that canonical position k came from.
    """

    exponents: tuple[int, ...]
    permutation: tuple[int, ...] = field(default=())

    def __post_init__(self) -> None:
        exps = tuple(int(e) for e in self.exponents)
        if not exps or any(e < 1 for e in exps):
            raise PreconditionError(f"canonical exponents must be positive, got {exps}")
        if any(a > b for a, b in zip(exps, exps[1:])):
            raise PreconditionError(f"canonical exponents must be sorted, got {exps}")
        perm = tuple(self.permutation) or tuple(range(len(exps)))
        if len(perm) != len(exps) or len(set(perm)) != len(perm) or min(perm) < 0:
            raise PreconditionError(f"permutation {perm} does not match {exps}")
        object.__setattr__(self, "exponents", exps)
        object.__setattr__(self, "permutation", perm)

    @classmethod
    def of(cls, *exponents: int) -> CanonicalMonomial:
        """Canonical monomial with the identity variable map."""
        return cls(tuple(exponents))

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def num_vars(self) -> int:
        return len(self.exponents)

    def to_monomial(self) -> Monomial:
        """Re-embed into raw variable positions."""
        raw = [0] * (max(self.permutation) + 1)
        for k, e in zip(self.permutation, self.exponents):
            raw[k] = e
        return Monomial(tuple(raw))

    def __str__(self) -> str:
        return format_exponents(self.exponents)


@dataclass(frozen=True)
class Partition:
    """d_1 <= ... <= d_r, positive parts."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        parts = tuple(int(p) for p in self.parts)
        if not parts or any(p < 1 for p in parts):
            raise PreconditionError(f"partition parts must be positive, got {parts}")
        if any(a > b for a, b in zip(parts, parts[1:])):
            raise PreconditionError(f"partition parts must be non-decreasing, got {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def total(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def as_canonical(self) -> CanonicalMonomial:
        return CanonicalMonomial(self.parts)


def normalize(m: Monomial) -> CanonicalMonomial:
    """Drop zero exponents and sort, ties keep the user's variable order."""
    if m.degree < 1:
        raise DomainError("constant has no Waring decomposition target")
    order = sorted((i for i, e in enumerate(m.exponents) if e), key=lambda i: (m.exponents[i], i))
    return CanonicalMonomial(tuple(m.exponents[i] for i in order), tuple(order))


def parse_monomial(text: str) -> Monomial:
    """Parse `x1^2*x3` style input. Variables are 1-indexed, repeats add up."""
    compact = re.sub(r"\s+", "", text or "")
    if not compact:
        raise ParseError("empty monomial expression")
    powers: dict[int, int] = {}
    for factor in compact.split("*"):
        match = _FACTOR.fullmatch(factor)
        if match is None:
            raise ParseError(f"bad factor {factor!r} in {text!r}; expected x<k> or x<k>^<e>")
        index = int(match.group(1))
        if index < 1:
            raise ParseError(f"variables are 1-indexed, got x{index}")
        if index > MAX_VARIABLE:
            raise ParseError(f"variable x{index} is beyond x{MAX_VARIABLE}")
        exponent = int(match.group(2)) if match.group(2) is not None else 1
        powers[index] = powers.get(index, 0) + exponent
    exps = [0] * max(powers)
    for index, exponent in powers.items():
        exps[index - 1] = exponent
    return Monomial(tuple(exps))


def format_exponents(exponents: Sequence[int], variables: Iterable[int] | None = None) -> str:
    """Render exponents back into the text grammar. variables are 1-based labels."""
    labels = list(variables) if variables is not None else list(range(1, len(exponents) + 1))
    factors = [
        f"x{v}" if e == 1 else f"x{v}^{e}"
        for v, e in sorted(zip(labels, exponents))
        if e
    ]
    return "*".join(factors) if factors else "1"
