"""Initial-value propagation and end-to-end verification of reductions.

For the shift instantiation the system is a linear difference system, so it
can be iterated directly; the iterated trajectory is the independent oracle
against which the reduced scalar equations and the derived initial
conditions are checked.  Verification of a candidate solution compares
residual elements to zero on the maximal window where every term is defined
and reports that window explicitly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactcore import Matrix, as_column, mat_vec
from .operators import (
    ElementColumn,
    FiniteSequence,
    HorizonError,
    OperatorKind,
    OperatorElement,
    apply_vector,
    eval_scalar_equation,
    mat_act,
)
from .reduction import ReducedSystem, total_reduce_adjugate, total_reduce_minors


@dataclass(frozen=True)
class CauchyProblem:
    """A shift-kind system with initial data and an iteration horizon.

    The trajectory covers t0 .. t0 + horizon; residuals of the reduced
    scalar equations are then comparable on t0 .. t0 + horizon - n.
    """

    b: Matrix
    phi: ElementColumn
    t0: int
    x0: tuple[Fraction, ...]
    horizon: int

    def __post_init__(self):
        n = self.b.n
        if len(self.x0) != n:
            raise ValueError(f"initial column has {len(self.x0)} entries, expected {n}")
        if self.horizon < n + 1:
            raise ValueError(f"horizon must be >= n + 1 = {n + 1}, got {self.horizon}")
        if self.phi.variant != "sequence":
            raise ValueError("initial-value problems act on sequence columns")
        if self.phi.entries[0].origin != self.t0:
            raise ValueError("free column origin must match t0")
        if self.phi.entries[0].horizon < self.horizon:
            raise HorizonError(
                f"free column horizon {self.phi.entries[0].horizon} < iteration horizon {self.horizon}"
            )


@dataclass(frozen=True)
class ResidualReport:
    """Residual of one reduced scalar equation, with its comparison window."""

    variable: int
    residual: OperatorElement
    window: tuple[int, int] | None
    is_zero: bool


@dataclass(frozen=True)
class VerificationReport:
    reduced: ReducedSystem
    route_agreement: bool
    residuals: tuple[ResidualReport, ...]

    def all_zero(self) -> bool:
        return self.route_agreement and all(r.is_zero for r in self.residuals)


def iterate_difference(b: Matrix, phi: ElementColumn, x0, steps: int) -> ElementColumn:
    """Iterate x(t+1) = B x(t) + phi(t) exactly from x(t0) = x0.

    Returns the n trajectories as sequences over t0 .. t0 + steps.
    """
    n = b.n
    if phi.variant != "sequence":
        raise ValueError("difference iteration needs a sequence free column")
    if len(phi) != n:
        raise ValueError(f"free column has {len(phi)} entries, expected {n}")
    start = as_column(x0)
    if len(start) != n:
        raise ValueError(f"initial column has {len(start)} entries, expected {n}")
    if steps < 0:
        raise ValueError("steps must be >= 0")
    if phi.entries[0].horizon < steps:
        raise HorizonError(f"free column horizon {phi.entries[0].horizon} < steps {steps}")
    t0 = phi.entries[0].origin
    states = [start]
    current = start
    for step in range(steps):
        phi_t = tuple(entry.values[step] for entry in phi.entries)
        current = tuple(a + c for a, c in zip(mat_vec(b, current), phi_t))
        states.append(current)
    return ElementColumn(
        FiniteSequence(t0, tuple(state[i] for state in states)) for i in range(n)
    )


def derived_initial_conditions(b: Matrix, phi: ElementColumn, x0, i: int, j: int) -> Fraction:
    """Initial value of the j-th operator power of variable i.

    Computes [B^j x(t0)]_i + sum_{k=0}^{j-1} [B^(j-1-k) (A^k phi)(t0)]_i, which
    for the shift kind equals the trajectory value x_i(t0 + j).
    """
    n = b.n
    if not 1 <= i <= n:
        raise IndexError(f"variable index {i} out of range 1..{n}")
    if not 1 <= j <= n - 1:
        raise IndexError(f"operator power {j} out of range 1..{n - 1}")
    if phi.variant != "sequence":
        raise ValueError("derived initial conditions need a sequence free column")
    if phi.entries[0].horizon <= j:
        raise HorizonError(f"free column horizon {phi.entries[0].horizon} too short for power {j}")
    start = as_column(x0)
    total = mat_vec(b ** j, start)[i - 1]
    for k in range(j):
        phi_k_at_t0 = tuple(entry.values[k] for entry in phi.entries)
        total += mat_vec(b ** (j - 1 - k), phi_k_at_t0)[i - 1]
    return total


def manufacture_solution(b: Matrix, x: ElementColumn, kind: OperatorKind) -> ElementColumn:
    """Free column that makes x a solution by construction: A(x) - B x."""
    return apply_vector(kind, x, 1) - mat_act(b, x)


def _window(e: OperatorElement) -> tuple[int, int] | None:
    if isinstance(e, FiniteSequence):
        return (e.origin, e.horizon)
    return None


def verify_total_reduction(
    b: Matrix, x: ElementColumn, phi: ElementColumn, kind: OperatorKind
) -> VerificationReport:
    """Check that each component of x satisfies its reduced scalar equation.

    Runs both reduction routes, records whether they agree exactly, and
    evaluates the per-variable residuals against the adjugate-route
    right-hand side.
    """
    n = b.n
    if len(x) != n:
        raise ValueError(f"candidate column has {len(x)} entries, expected {n}")
    if x.variant != phi.variant:
        raise ValueError("candidate and free columns must share a variant")
    reduced = total_reduce_adjugate(b, phi, kind)
    cross = total_reduce_minors(b, phi, kind)
    agreement = (
        reduced.rhs_evaluated == cross.rhs_evaluated
        and reduced.cp == cross.cp
        and reduced.rhs_symbolic == cross.rhs_symbolic
    )
    residuals = []
    for idx in range(n):
        res = eval_scalar_equation(reduced.cp, kind, x[idx], reduced.rhs_evaluated[idx])
        residuals.append(
            ResidualReport(
                variable=idx + 1,
                residual=res,
                window=_window(res),
                is_zero=res.is_zero(),
            )
        )
    return VerificationReport(
        reduced=reduced,
        route_agreement=agreement,
        residuals=tuple(residuals),
    )


def solve_cauchy(problem: CauchyProblem) -> tuple[ElementColumn, VerificationReport, tuple[tuple[Fraction, ...], ...]]:
    """Trajectories, reduction verification, and derived initial conditions.

    Returns (trajectories, verification, derived) where derived[i-1][j-1]
    is the initial value of the j-th operator power of variable i.
    """
    n = problem.b.n
    trajectories = iterate_difference(problem.b, problem.phi, problem.x0, problem.horizon)
    verification = verify_total_reduction(problem.b, trajectories, problem.phi, OperatorKind.SHIFT)
    derived = tuple(
        tuple(derived_initial_conditions(problem.b, problem.phi, problem.x0, i, j) for j in range(1, n))
        for i in range(1, n + 1)
    )
    return trajectories, verification, derived
