"""Exact rational linear feasibility with machine-checked answers.

Decides systems of the form ``A x >= b`` over unrestricted rational ``x``.
The answer carries its own proof: a witness vector satisfying every row, or
a nonnegative multiplier vector ``beta`` with ``beta A = 0`` and
``beta b > 0``, which makes the system unsatisfiable (a solution would give
``0 = (beta A) x = beta (A x) >= beta b > 0``).

The solver is a dense phase-one simplex over `fractions.Fraction` using
Bland's rule, so it terminates on every input and never rounds.  Both kinds
of answer are re-verified exactly before they are returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .core import DomainError, Rat, RatLike, rat

__all__ = [
    "FeasibilityResult",
    "exact_feasibility",
    "verify_witness",
    "verify_certificate",
]

_ZERO = Fraction(0)
_ONE = Fraction(1)

Matrix = Sequence[Sequence[RatLike]]
Vector = Sequence[RatLike]


@dataclass(frozen=True)
class FeasibilityResult:
    """Outcome of one feasibility question.

    Exactly one of ``witness`` and ``certificate`` is set: the witness
    satisfies every inequality, the certificate proves there is none.
    """

    feasible: bool
    witness: tuple[Rat, ...] | None = None
    certificate: tuple[Rat, ...] | None = None


def verify_witness(rows: Matrix, rhs: Vector, witness: Sequence[Rat]) -> bool:
    """Check ``A x >= b`` exactly, row by row."""
    for row, bound in zip(rows, rhs):
        value = sum((rat(a) * x for a, x in zip(row, witness)), _ZERO)
        if value < rat(bound):
            return False
    return True


def verify_certificate(rows: Matrix, rhs: Vector, beta: Sequence[Rat]) -> bool:
    """Check ``beta >= 0``, ``beta A = 0`` and ``beta b > 0`` exactly."""
    if len(beta) != len(rows):
        return False
    if any(v < 0 for v in beta):
        return False
    width = len(rows[0]) if rows else 0
    for j in range(width):
        if sum((beta[i] * rat(rows[i][j]) for i in range(len(rows))), _ZERO) != 0:
            return False
    value = sum((beta[i] * rat(b) for i, b in enumerate(rhs)), _ZERO)
    return value > 0


def exact_feasibility(rows: Matrix, rhs: Vector) -> FeasibilityResult:
    """Decide ``A x >= b`` over the rationals, with witness or certificate."""
    matrix = [[rat(v) for v in row] for row in rows]
    bounds = [rat(v) for v in rhs]
    nrows = len(matrix)
    if len(bounds) != nrows:
        raise DomainError(
            f"matrix has {nrows} rows but the right-hand side has {len(bounds)}"
        )
    nvars = len(matrix[0]) if nrows else 0
    for row in matrix:
        if len(row) != nvars:
            raise DomainError("matrix rows must all have the same length")
    if nrows == 0:
        return FeasibilityResult(True, witness=(_ZERO,) * nvars)

    # Free variables split as x = u - v with u, v >= 0; each row gets a
    # surplus variable and an artificial, and is sign-flipped so its
    # right-hand side is nonnegative.  Phase one minimizes the artificials.
    ncols = 2 * nvars + 2 * nrows
    surplus = 2 * nvars
    artificial = 2 * nvars + nrows
    tableau: list[list[Fraction]] = []
    sigma: list[Fraction] = []
    for i in range(nrows):
        sign = _ONE if bounds[i] >= 0 else -_ONE
        sigma.append(sign)
        row = [_ZERO] * (ncols + 1)
        for j in range(nvars):
            coefficient = sign * matrix[i][j]
            row[j] = coefficient
            row[nvars + j] = -coefficient
        row[surplus + i] = -sign
        row[artificial + i] = _ONE
        row[-1] = sign * bounds[i]
        tableau.append(row)
    basis = [artificial + i for i in range(nrows)]

    # Reduced-cost row for "minimize sum of artificials", with the basic
    # artificial columns already priced out; the last slot holds -objective.
    objective = [_ZERO] * (ncols + 1)
    for j in range(ncols + 1):
        objective[j] = -sum((tableau[i][j] for i in range(nrows)), _ZERO)
    for i in range(nrows):
        objective[artificial + i] += _ONE

    while True:
        entering = next((j for j in range(ncols) if objective[j] < 0), None)
        if entering is None:
            break
        leaving = None
        best_ratio = None
        for i in range(nrows):
            coefficient = tableau[i][entering]
            if coefficient > 0:
                ratio = tableau[i][-1] / coefficient
                if (
                    best_ratio is None
                    or ratio < best_ratio
                    or (ratio == best_ratio and basis[i] < basis[leaving])
                ):
                    best_ratio = ratio
                    leaving = i
        if leaving is None:
            raise RuntimeError("phase-one simplex cannot be unbounded")
        pivot_row = tableau[leaving]
        pivot = pivot_row[entering]
        if pivot != 1:
            pivot_row = [v / pivot for v in pivot_row]
            tableau[leaving] = pivot_row
        for i in range(nrows):
            if i != leaving and tableau[i][entering] != 0:
                factor = tableau[i][entering]
                tableau[i] = [a - factor * p for a, p in zip(tableau[i], pivot_row)]
        if objective[entering] != 0:
            factor = objective[entering]
            objective = [a - factor * p for a, p in zip(objective, pivot_row)]
        basis[leaving] = entering

    infeasibility = -objective[-1]
    if infeasibility == 0:
        solution = [_ZERO] * nvars
        for i, column in enumerate(basis):
            if column < nvars:
                solution[column] += tableau[i][-1]
            elif column < 2 * nvars:
                solution[column - nvars] -= tableau[i][-1]
        witness = tuple(solution)
        if not verify_witness(matrix, bounds, witness):
            raise RuntimeError("simplex witness failed exact verification")
        return FeasibilityResult(True, witness=witness)

    # The multiplier of row i is read off the reduced cost of its artificial
    # column (cost 1, column e_i), undoing the sign flip applied above.
    beta = tuple(
        sigma[i] * (_ONE - objective[artificial + i]) for i in range(nrows)
    )
    if not verify_certificate(matrix, bounds, beta):
        raise RuntimeError("simplex certificate failed exact verification")
    return FeasibilityResult(False, certificate=beta)
