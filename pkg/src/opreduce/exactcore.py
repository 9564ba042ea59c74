"""Exact rational scalars and dense rational matrices.

Everything in the reduction pipeline is built on arbitrary-precision
rationals; no floating point is accepted anywhere.  Scalars are
``fractions.Fraction`` values, which are always kept in canonical form
(positive denominator, gcd 1, zero as 0/1).  Matrices are immutable and
dense, with exact determinants.

Row/column index arguments on the public surface are 1-based.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Sequence

Rational = Fraction

_RATIONAL_RE = re.compile(r"[+-]?\d+(/\d+)?\Z")


class DimensionError(ValueError):
    """Matrix/vector shapes do not conform."""


def parse_rational(text: str) -> Fraction:
    """Parse a rational literal: optional sign, integer, optional '/denominator'.

    Accepts e.g. ``"5"``, ``"-3/7"``.  Float syntax is rejected.
    """
    text = text.strip()
    if not _RATIONAL_RE.match(text):
        raise ValueError(f"invalid rational literal {text!r}")
    if "/" in text:
        num, den = text.split("/")
        if int(den) == 0:
            raise ValueError(f"zero denominator in rational literal {text!r}")
        return Fraction(int(num), int(den))
    return Fraction(int(text))


def format_rational(q: Fraction) -> str:
    """Canonical text form: ``"p"`` or ``"p/q"`` with q > 1."""
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def as_rational(value) -> Fraction:
    """Coerce an int, Fraction or rational literal string; floats are rejected."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational scalar")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"not an exact rational: {value!r} (floats are not accepted)")


def as_column(values: Iterable) -> tuple[Fraction, ...]:
    """Coerce an iterable of scalars to a column (tuple of Fractions)."""
    return tuple(as_rational(v) for v in values)


class Matrix:
    """Immutable dense matrix over the rationals."""

    __slots__ = ("_rows",)

    def __init__(self, rows: Iterable[Iterable]):
        data = tuple(tuple(as_rational(x) for x in row) for row in rows)
        if not data or not data[0]:
            raise DimensionError("matrix must have at least one row and column")
        width = len(data[0])
        if any(len(row) != width for row in data):
            raise DimensionError("matrix rows must all have the same length")
        self._rows = data

    @property
    def nrows(self) -> int:
        return len(self._rows)

    @property
    def ncols(self) -> int:
        return len(self._rows[0])

    @property
    def n(self) -> int:
        """Dimension of a square matrix."""
        if self.nrows != self.ncols:
            raise DimensionError(f"matrix is {self.nrows}x{self.ncols}, not square")
        return self.nrows

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def entry(self, i: int, j: int) -> Fraction:
        """Entry at row i, column j (1-based)."""
        if not (1 <= i <= self.nrows and 1 <= j <= self.ncols):
            raise IndexError(f"entry ({i},{j}) out of range for {self.nrows}x{self.ncols} matrix")
        return self._rows[i - 1][j - 1]

    def rows(self) -> tuple[tuple[Fraction, ...], ...]:
        return self._rows

    def row(self, i: int) -> tuple[Fraction, ...]:
        """Row i (1-based)."""
        if not 1 <= i <= self.nrows:
            raise IndexError(f"row {i} out of range")
        return self._rows[i - 1]

    def trace(self) -> Fraction:
        return sum((self._rows[i][i] for i in range(self.n)), Fraction(0))

    def __eq__(self, other) -> bool:
        return isinstance(other, Matrix) and self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __add__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise DimensionError("matrix addition needs equal shapes")
        return Matrix(
            tuple(a + b for a, b in zip(r1, r2))
            for r1, r2 in zip(self._rows, other._rows)
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        return self + (-1) * other

    def __neg__(self) -> "Matrix":
        return (-1) * self

    def __mul__(self, other):
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise DimensionError(
                    f"cannot multiply {self.nrows}x{self.ncols} by {other.nrows}x{other.ncols}"
                )
            cols = tuple(zip(*other._rows))
            return Matrix(
                tuple(sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in cols)
                for row in self._rows
            )
        try:
            q = as_rational(other)
        except TypeError:
            return NotImplemented
        return Matrix(tuple(q * x for x in row) for row in self._rows)

    def __rmul__(self, other):
        try:
            q = as_rational(other)
        except TypeError:
            return NotImplemented
        return Matrix(tuple(q * x for x in row) for row in self._rows)

    def __pow__(self, j: int) -> "Matrix":
        if not isinstance(j, int) or j < 0:
            raise ValueError("matrix power needs an integer exponent >= 0")
        result = identity(self.n)
        base = self
        while j:
            if j & 1:
                result = result * base
            base = base * base if j > 1 else base
            j >>= 1
        return result

    def __repr__(self) -> str:
        body = ", ".join(
            "[" + ", ".join(format_rational(x) for x in row) + "]" for row in self._rows
        )
        return f"Matrix([{body}])"


def identity(n: int) -> Matrix:
    if n < 1:
        raise DimensionError("identity needs n >= 1")
    return Matrix(
        tuple(Fraction(1) if i == j else Fraction(0) for j in range(n)) for i in range(n)
    )


def zeros(nrows: int, ncols: int | None = None) -> Matrix:
    ncols = nrows if ncols is None else ncols
    return Matrix(tuple(Fraction(0) for _ in range(ncols)) for _ in range(nrows))


def column_of(m: Matrix, s: int) -> tuple[Fraction, ...]:
    """Column s of the matrix (1-based)."""
    if not 1 <= s <= m.ncols:
        raise IndexError(f"column {s} out of range")
    return tuple(row[s - 1] for row in m.rows())


def column_substitute(m: Matrix, i: int, v: Sequence) -> Matrix:
    """Replace column i (1-based) with the column v; all other entries unchanged."""
    if not 1 <= i <= m.ncols:
        raise IndexError(f"column {i} out of range")
    col = as_column(v)
    if len(col) != m.nrows:
        raise DimensionError(f"substituted column has {len(col)} entries, expected {m.nrows}")
    return Matrix(
        row[: i - 1] + (col[r],) + row[i:] for r, row in enumerate(m.rows())
    )


def mat_vec(m: Matrix, v: Sequence) -> tuple[Fraction, ...]:
    """Matrix times column vector."""
    col = as_column(v)
    if len(col) != m.ncols:
        raise DimensionError(f"vector of length {len(col)} does not conform to {m.nrows}x{m.ncols}")
    return tuple(sum((a * b for a, b in zip(row, col)), Fraction(0)) for row in m.rows())


def det_cofactor(m: Matrix) -> Fraction:
    """Determinant by cofactor expansion along the first row.

    Factorial cost; used directly for n <= 3 and as an independent oracle
    for the fraction-free route in tests.
    """
    n = m.n
    rows = m.rows()

    def expand(idx_rows: tuple[int, ...], idx_cols: tuple[int, ...]) -> Fraction:
        k = len(idx_rows)
        if k == 1:
            return rows[idx_rows[0]][idx_cols[0]]
        r0 = idx_rows[0]
        total = Fraction(0)
        sign = 1
        for pos, c in enumerate(idx_cols):
            a = rows[r0][c]
            if a != 0:
                sub_cols = idx_cols[:pos] + idx_cols[pos + 1 :]
                total += sign * a * expand(idx_rows[1:], sub_cols)
            sign = -sign
        return total

    indices = tuple(range(n))
    return expand(indices, indices)


def det_bareiss(m: Matrix) -> Fraction:
    """Determinant by fraction-free (one-step) elimination.

    Intermediate divisions are exact, which bounds coefficient growth
    compared to plain Gaussian elimination on big rationals.
    """
    n = m.n
    a = [list(row) for row in m.rows()]
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) / prev
            a[i][k] = Fraction(0)
        prev = pivot
    return sign * a[n - 1][n - 1]


def det(m: Matrix) -> Fraction:
    """Exact determinant; cofactor expansion for n <= 3, Bareiss elimination above."""
    if m.n <= 3:
        return det_cofactor(m)
    return det_bareiss(m)
