"""Concrete linear operators and the vector-space elements they act on.

Three operator kinds are supported: the shift operator on finite rational
sequences, the formal derivative on rational-coefficient polynomials, and the
zero operator on either (which degenerates the whole reduction pipeline to
Cramer's rule).

Sequences are finite tables, not closed-form generators: a shift consumes one
step of horizon instead of inventing data, so callers must provision enough
horizon for the verification window they want.  Adding two sequences with the
same origin truncates to the largest window where both are defined.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .exactcore import Matrix, as_column, as_rational, format_rational


class HorizonError(ValueError):
    """A sequence operation ran out of horizon."""


class HeterogeneousColumnError(ValueError):
    """Column entries mix variants, origins or horizons."""


class OperatorKind(enum.Enum):
    SHIFT = "shift"
    DERIVATIVE = "derivative"
    ZERO = "zero"

    @classmethod
    def from_name(cls, name: str) -> "OperatorKind":
        for kind in cls:
            if kind.value == name:
                return kind
        raise ValueError(f"unknown operator kind {name!r}")


class Polynomial:
    """Rational-coefficient polynomial, ascending degree, trailing zeros stripped."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [as_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def derivative(self) -> "Polynomial":
        return Polynomial(k * c for k, c in enumerate(self.coeffs) if k >= 1)

    def evaluate(self, t) -> Fraction:
        point = as_rational(t)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return acc

    def __add__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        summed = list(a)
        for k, c in enumerate(b):
            summed[k] += c
        return Polynomial(summed)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-1) * other

    def __neg__(self) -> "Polynomial":
        return (-1) * self

    def __rmul__(self, scalar) -> "Polynomial":
        q = as_rational(scalar)
        return Polynomial(q * c for c in self.coeffs)

    __mul__ = __rmul__

    def __eq__(self, other) -> bool:
        return isinstance(other, Polynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("Polynomial", self.coeffs))

    def __repr__(self) -> str:
        return f"Polynomial([{', '.join(format_rational(c) for c in self.coeffs)}])"


class FiniteSequence:
    """Finite window of a rational sequence: values e(t0), ..., e(t0 + H - 1)."""

    __slots__ = ("origin", "values")

    def __init__(self, origin: int, values: Iterable):
        vals = as_column(values)
        if not vals:
            raise HorizonError("sequence needs horizon >= 1")
        self.origin = int(origin)
        self.values: tuple[Fraction, ...] = vals

    @property
    def horizon(self) -> int:
        return len(self.values)

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.values)

    def value_at(self, t: int) -> Fraction:
        k = t - self.origin
        if not 0 <= k < self.horizon:
            raise HorizonError(f"time {t} outside window [{self.origin}, {self.origin + self.horizon - 1}]")
        return self.values[k]

    def shift(self) -> "FiniteSequence":
        """New window with value e(t+1) at each t; horizon shrinks by one."""
        if self.horizon < 2:
            raise HorizonError("cannot shift a horizon-1 sequence")
        return FiniteSequence(self.origin, self.values[1:])

    def __add__(self, other: "FiniteSequence") -> "FiniteSequence":
        if not isinstance(other, FiniteSequence):
            return NotImplemented
        if self.origin != other.origin:
            raise HeterogeneousColumnError("cannot add sequences with different origins")
        h = min(self.horizon, other.horizon)
        return FiniteSequence(self.origin, tuple(a + b for a, b in zip(self.values[:h], other.values[:h])))

    def __sub__(self, other: "FiniteSequence") -> "FiniteSequence":
        if not isinstance(other, FiniteSequence):
            return NotImplemented
        return self + (-1) * other

    def __neg__(self) -> "FiniteSequence":
        return (-1) * self

    def __rmul__(self, scalar) -> "FiniteSequence":
        q = as_rational(scalar)
        return FiniteSequence(self.origin, tuple(q * v for v in self.values))

    __mul__ = __rmul__

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FiniteSequence)
            and self.origin == other.origin
            and self.values == other.values
        )

    def __hash__(self) -> int:
        return hash(("FiniteSequence", self.origin, self.values))

    def __repr__(self) -> str:
        vals = ", ".join(format_rational(v) for v in self.values)
        return f"FiniteSequence(origin={self.origin}, values=[{vals}])"


OperatorElement = Union[Polynomial, FiniteSequence]


class ElementColumn:
    """Homogeneous column of operator elements.

    All entries must share a variant, and sequence entries must share origin
    and horizon.
    """

    __slots__ = ("entries",)

    def __init__(self, entries: Iterable[OperatorElement]):
        items = tuple(entries)
        if not items:
            raise HeterogeneousColumnError("column needs at least one entry")
        first = items[0]
        if isinstance(first, FiniteSequence):
            for e in items[1:]:
                if not isinstance(e, FiniteSequence):
                    raise HeterogeneousColumnError("column mixes sequences and polynomials")
                if e.origin != first.origin or e.horizon != first.horizon:
                    raise HeterogeneousColumnError("sequence column entries must share origin and horizon")
        elif isinstance(first, Polynomial):
            for e in items[1:]:
                if not isinstance(e, Polynomial):
                    raise HeterogeneousColumnError("column mixes sequences and polynomials")
        else:
            raise TypeError(f"not an operator element: {first!r}")
        self.entries = items

    @property
    def variant(self) -> str:
        return "sequence" if isinstance(self.entries[0], FiniteSequence) else "polynomial"

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, idx: int) -> OperatorElement:
        return self.entries[idx]

    def __add__(self, other: "ElementColumn") -> "ElementColumn":
        if not isinstance(other, ElementColumn):
            return NotImplemented
        if len(self) != len(other):
            raise HeterogeneousColumnError("column lengths differ")
        return ElementColumn(a + b for a, b in zip(self.entries, other.entries))

    def __sub__(self, other: "ElementColumn") -> "ElementColumn":
        if not isinstance(other, ElementColumn):
            return NotImplemented
        if len(self) != len(other):
            raise HeterogeneousColumnError("column lengths differ")
        return ElementColumn(a - b for a, b in zip(self.entries, other.entries))

    def __eq__(self, other) -> bool:
        return isinstance(other, ElementColumn) and self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        return f"ElementColumn({list(self.entries)!r})"


def zero_like(e: OperatorElement) -> OperatorElement:
    """Zero element of the same variant (and window, for sequences)."""
    if isinstance(e, FiniteSequence):
        return FiniteSequence(e.origin, (Fraction(0),) * e.horizon)
    if isinstance(e, Polynomial):
        return Polynomial()
    raise TypeError(f"not an operator element: {e!r}")


def apply(kind: OperatorKind, e: OperatorElement) -> OperatorElement:
    """One application of the operator to an element."""
    if kind is OperatorKind.ZERO:
        return zero_like(e)
    if kind is OperatorKind.SHIFT:
        if not isinstance(e, FiniteSequence):
            raise TypeError("shift operator acts on sequences")
        return e.shift()
    if kind is OperatorKind.DERIVATIVE:
        if not isinstance(e, Polynomial):
            raise TypeError("derivative operator acts on polynomials")
        return e.derivative()
    raise ValueError(f"unknown operator kind {kind!r}")


def apply_power(kind: OperatorKind, e: OperatorElement, j: int) -> OperatorElement:
    """j-fold application; j = 0 is the identity."""
    if j < 0:
        raise ValueError("operator power must be >= 0")
    if kind is OperatorKind.SHIFT and isinstance(e, FiniteSequence) and e.horizon <= j:
        raise HorizonError(f"shift power {j} needs horizon > {j}, got {e.horizon}")
    for _ in range(j):
        e = apply(kind, e)
    return e


def apply_vector(kind: OperatorKind, col: ElementColumn, j: int = 1) -> ElementColumn:
    """Componentwise operator power on a column."""
    return ElementColumn(apply_power(kind, e, j) for e in col)


def lincomb(scalars: Sequence, elements: Sequence[OperatorElement]) -> OperatorElement:
    """Exact rational linear combination of elements of one variant."""
    if len(scalars) != len(elements):
        raise ValueError("lincomb needs matching lengths")
    if not elements:
        raise ValueError("lincomb needs at least one element")
    coeffs = as_column(scalars)
    acc = coeffs[0] * elements[0]
    for q, e in zip(coeffs[1:], elements[1:]):
        acc = acc + q * e
    return acc


def mat_act(m: Matrix, col: ElementColumn) -> ElementColumn:
    """Matrix acting on an element column: row-by-row linear combinations."""
    if m.ncols != len(col):
        raise HeterogeneousColumnError(
            f"matrix with {m.ncols} columns cannot act on a column of length {len(col)}"
        )
    return ElementColumn(lincomb(row, col.entries) for row in m.rows())


def eval_scalar_equation(cp, kind: OperatorKind, x: OperatorElement, psi: OperatorElement) -> OperatorElement:
    """Residual A^n(x) + d_1 A^(n-1)(x) + ... + d_n x - psi.

    The zero element iff x solves the reduced scalar equation with
    non-homogeneous term psi on the window where all terms are defined.
    """
    n = cp.n
    if kind is OperatorKind.SHIFT and isinstance(x, FiniteSequence) and x.horizon <= n:
        raise HorizonError(f"order-{n} equation needs horizon > {n}, got {x.horizon}")
    residual = apply_power(kind, x, n)
    for k in range(1, n + 1):
        residual = residual + cp.coefficient(k) * apply_power(kind, x, n - k)
    return residual - psi
