"""Characteristic polynomial and adjugate matrix-polynomial coefficients.

The production route interleaves the trace formula d_k = -trace(B_{k-1} B)/k
with the recurrence B_k = B_{k-1} B + d_k I, giving all coefficients of
det(lambda*I - B) and of adj(lambda*I - B) in O(n^4) exact operations.  The
division by k is legal over the rationals; this route is sensitive to the
field characteristic, which is one reason the brute-force minor route stays
available as an oracle (`char_poly_minors`).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactcore import Matrix, as_rational, identity, zeros
from .minors import delta_k


@dataclass(frozen=True)
class CharPoly:
    """Monic characteristic polynomial lambda^n + d[0] lambda^(n-1) + ... + d[n-1]."""

    n: int
    d: tuple[Fraction, ...]

    def __post_init__(self):
        if self.n < 1 or len(self.d) != self.n:
            raise ValueError("characteristic polynomial needs exactly n trailing coefficients")

    def coefficient(self, k: int) -> Fraction:
        """d_k for 1 <= k <= n."""
        if not 1 <= k <= self.n:
            raise IndexError(f"coefficient index {k} out of range 1..{self.n}")
        return self.d[k - 1]

    def evaluate(self, lam) -> Fraction:
        """Value of the polynomial at a rational point."""
        lam = as_rational(lam)
        acc = Fraction(1)
        for dk in self.d:
            acc = acc * lam + dk
        return acc


@dataclass(frozen=True)
class AdjugateCoeffs:
    """Coefficients B_0..B_{n-1} of adj(lambda*I - B) as a polynomial in lambda."""

    n: int
    coeffs: tuple[Matrix, ...]
    cp: CharPoly

    def __post_init__(self):
        if len(self.coeffs) != self.n:
            raise ValueError("adjugate expansion needs exactly n matrix coefficients")


def char_poly(b: Matrix) -> CharPoly:
    """Characteristic polynomial via the trace-formula recurrence."""
    n = b.n
    d: list[Fraction] = []
    bk = identity(n)
    for k in range(1, n + 1):
        prod = bk * b
        dk = -prod.trace() / k
        d.append(dk)
        if k < n:
            bk = prod + dk * identity(n)
    return CharPoly(n, tuple(d))


def char_poly_minors(b: Matrix) -> CharPoly:
    """Oracle route: d_k = (-1)^k * (sum of order-k principal minors)."""
    n = b.n
    return CharPoly(n, tuple((-1) ** k * delta_k(b, k) for k in range(1, n + 1)))


def adjugate_coeffs(b: Matrix) -> AdjugateCoeffs:
    """Matrix coefficients of adj(lambda*I - B), with the characteristic polynomial."""
    n = b.n
    d: list[Fraction] = []
    coeffs: list[Matrix] = [identity(n)]
    bk = coeffs[0]
    for k in range(1, n + 1):
        prod = bk * b
        dk = -prod.trace() / k
        d.append(dk)
        if k < n:
            bk = prod + dk * identity(n)
            coeffs.append(bk)
    return AdjugateCoeffs(n, tuple(coeffs), CharPoly(n, tuple(d)))


def adjugate_at(ac: AdjugateCoeffs, lam) -> Matrix:
    """Evaluate the adjugate matrix polynomial at a rational point (Horner)."""
    lam = as_rational(lam)
    acc = ac.coeffs[0]
    for bj in ac.coeffs[1:]:
        acc = lam * acc + bj
    return acc


def cayley_hamilton_residual(b: Matrix) -> Matrix:
    """B_{n-1} B + d_n I; the zero matrix whenever the recurrence is correct."""
    ac = adjugate_coeffs(b)
    n = b.n
    return ac.coeffs[n - 1] * b + ac.cp.coefficient(n) * identity(n)


def cayley_hamilton_check(b: Matrix) -> bool:
    """True iff the recurrence terminates at zero, as the Cayley-Hamilton theorem demands."""
    return cayley_hamilton_residual(b) == zeros(b.n)
