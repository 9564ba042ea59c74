"""Principal-minor sums by brute-force enumeration.

``delta_k(M)`` sums all order-k principal minors of M.  ``delta_k_i(M, i, v)``
substitutes v into column i first and then sums the order-k principal minors
whose index set contains i.  Enumeration is exponential by design: this module
is the specification-by-enumeration that every polynomial-time route in the
package is checked against.

Subsets are enumerated in lexicographic order; exact arithmetic makes the
summation order irrelevant, fixing it just keeps debugging deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .exactcore import Matrix, as_column, column_substitute, det


@dataclass(frozen=True)
class MinorDescriptor:
    """Identifies one family of enumerated minors: order k, optional anchor column."""

    order: int
    anchor: int | None = None
    substituted: bool = False

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("minor order must be >= 1")
        if self.anchor is not None and self.anchor < 1:
            raise ValueError("anchor column index is 1-based")


def principal_submatrix(m: Matrix, subset: Sequence[int]) -> Matrix:
    """Submatrix selected by the same 0-based index set for rows and columns."""
    rows = m.rows()
    return Matrix(tuple(rows[r][c] for c in subset) for r in subset)


def delta_k(m: Matrix, k: int) -> Fraction:
    """Sum of all order-k principal minors; 1 for k = 0, 0 for k > n."""
    n = m.n
    if k < 0:
        raise ValueError("minor order must be >= 0")
    if k == 0:
        return Fraction(1)
    if k > n:
        return Fraction(0)
    total = Fraction(0)
    for subset in combinations(range(n), k):
        total += det(principal_submatrix(m, subset))
    return total


def delta_k_i(m: Matrix, k: int, i: int, v: Sequence) -> Fraction:
    """Substitute v into column i, then sum order-k principal minors containing i.

    Column index i is 1-based.  Returns 0 for k > n.
    """
    n = m.n
    if k < 1:
        raise ValueError("minor order must be >= 1")
    if not 1 <= i <= n:
        raise IndexError(f"column {i} out of range for dimension {n}")
    col = as_column(v)
    if len(col) != n:
        raise ValueError(f"substituted column has {len(col)} entries, expected {n}")
    if k > n:
        return Fraction(0)
    substituted = column_substitute(m, i, col)
    anchor = i - 1
    total = Fraction(0)
    for subset in combinations(range(n), k):
        if anchor in subset:
            total += det(principal_submatrix(substituted, subset))
    return total


def delta_vec(m: Matrix, k: int, v: Sequence) -> tuple[Fraction, ...]:
    """Column whose i-th component is delta_k_i(m, k, i, v)."""
    return tuple(delta_k_i(m, k, i, v) for i in range(1, m.n + 1))


def delta_k_i_coeffs(m: Matrix, k: int, i: int) -> tuple[Fraction, ...]:
    """Coefficients of the linear functional v -> delta_k_i(m, k, i, v).

    Expanding each anchored minor along the substituted column i leaves
    scalar cofactors of order k-1, so the substituted entries enter
    linearly: delta_k_i(m, k, i, v) = sum_s coeffs[s-1] * v[s-1].  This is
    what lets the same minors act on operator-valued columns.
    """
    n = m.n
    if k < 1:
        raise ValueError("minor order must be >= 1")
    if not 1 <= i <= n:
        raise IndexError(f"column {i} out of range for dimension {n}")
    anchor = i - 1
    coeffs = [Fraction(0)] * n
    if k > n:
        return tuple(coeffs)
    rows = m.rows()
    for subset in combinations(range(n), k):
        if anchor not in subset:
            continue
        q = subset.index(anchor)
        minor_cols = subset[:q] + subset[q + 1 :]
        for p, r in enumerate(subset):
            minor_rows = subset[:p] + subset[p + 1 :]
            if k == 1:
                cof = Fraction(1)
            else:
                cof = det(Matrix(tuple(rows[rr][cc] for cc in minor_cols) for rr in minor_rows))
            coeffs[r] += (-1) ** (p + q) * cof
    return tuple(coeffs)
