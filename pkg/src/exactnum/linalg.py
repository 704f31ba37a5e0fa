"""Exact linear algebra - fraction-free rank and Gauss-Jordan solving over exact fields."""
import logging
from fractions import Fraction
from typing import Any, Sequence

from src.errors import PreconditionError, SingularSystemError

logger = logging.getLogger(__name__)


def _is_zero(x: Any) -> bool:
    is_zero = getattr(x, "is_zero", None)
    return is_zero() if callable(is_zero) else x == 0


def matrix_rank(rows: Sequence[Sequence]) -> int:
    """Rank by Bareiss elimination; entries are lifted to Fractions so every quotient is exact."""
    m = [[Fraction(x) for x in r] for r in rows]
    if not m or not m[0]:
        return 0
    n_rows, n_cols = len(m), len(m[0])
    if any(len(r) != n_cols for r in m):
        raise PreconditionError("rows must all have the same length")
    rank = 0
    prev = 1
    for col in range(n_cols):
        pivot = next((r for r in range(rank, n_rows) if m[r][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        p = m[rank][col]
        for r in range(rank + 1, n_rows):
            for c in range(col + 1, n_cols):
                m[r][c] = (m[r][c] * p - m[r][col] * m[rank][c]) / prev
            m[r][col] = 0
        prev = p
        rank += 1
        if rank == n_rows:
            break
    return rank


def solve_linear(matrix: Sequence[Sequence], rhs: Sequence) -> list:
    """Solve matrix @ x = rhs for a square invertible matrix over an exact field.

    Elements need +, -, *, / and either ``is_zero()`` or comparison with 0.
    """
    n = len(matrix)
    if len(rhs) != n or any(len(row) != n for row in matrix):
        raise PreconditionError("solve_linear expects a square system")
    aug = [list(row) + [rhs[i]] for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if not _is_zero(aug[r][col])), None)
        if pivot is None:
            raise SingularSystemError(f"no pivot in column {col} of a {n}x{n} system")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        lead = aug[col][col]
        inv = lead.inverse() if hasattr(lead, "inverse") else 1 / Fraction(lead)
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r == col or _is_zero(aug[r][col]):
                continue
            f = aug[r][col]
            aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    logger.debug("solved %dx%d exact system", n, n)
    return [row[n] for row in aug]
