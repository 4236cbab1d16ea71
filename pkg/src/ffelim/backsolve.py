"""Backward pass: determinant, Cramer numerators, exact solutions, adjugate.

Given the triangular matrix with ``delta`` in the last pivot, each augmented
column ``c`` is back-substituted from the bottom row up:

    v[k] = (delta * t[k][n+c] - sum_{j>k} t[k][j] * v[j]) / t[k][k]

with exact division. For a right-hand side ``b`` the values are the Cramer
numerators ``det(A with column k replaced by b)``; for the identity block
they are the adjugate entries.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .elimination import EliminationResult, forward_eliminate
from .errors import ShapeMismatch, SingularMatrix
from .matrix import DenseMatrix, augment, augment_identity
from .ring import ReducedFraction, Ring, RingElement


@dataclass(frozen=True)
class BackStep:
    """One backward-way evaluation: augmented column ``column``, row ``row``."""

    column: int
    row: int
    numerator: RingElement
    value: RingElement


@dataclass(frozen=True)
class DeterminantVector:
    """``delta`` and one back-substituted value per row for each augmented column.

    Values refer to the original (unpermuted) system.
    """

    delta: RingElement
    columns: tuple[tuple[RingElement, ...], ...]
    trace: tuple[BackStep, ...] | None = None


@dataclass(frozen=True)
class ExactSolution:
    delta: RingElement
    cramer: tuple[RingElement, ...]
    solution: tuple[ReducedFraction, ...]


@dataclass(frozen=True)
class AdjugateResult:
    delta: RingElement
    adjugate: DenseMatrix


def _back_column(
    t: Sequence[Sequence[RingElement]],
    n: int,
    col: int,
    delta: RingElement,
    ring: Ring,
    log: list[BackStep] | None,
    label: int,
) -> list[RingElement]:
    mul, sub, div = ring.mul, ring.sub, ring.exact_div
    values: list[RingElement] = [ring.zero] * n
    last = t[n - 1][col]
    values[n - 1] = last
    if log is not None:
        log.append(BackStep(label, n, last, last))
    for k in range(n - 2, -1, -1):
        row = t[k]
        acc = mul(delta, row[col])
        for j in range(k + 1, n):
            acc = sub(acc, mul(row[j], values[j]))
        values[k] = div(acc, row[k])
        if log is not None:
            log.append(BackStep(label, k + 1, acc, values[k]))
    return values


def back_substitute(elim: EliminationResult, trace: bool = False) -> DeterminantVector:
    """Run the backward way over every augmented column of ``elim``."""
    if elim.singular:
        raise SingularMatrix("singular matrix (det = 0)")
    ring = elim.ring
    system = elim.triangular
    n, m = system.n, system.m
    t = system.entries
    delta = elim.leading_minors[-1]
    log: list[BackStep] | None = [] if trace else None
    columns = []
    for c in range(m):
        values = _back_column(t, n, n + c, delta, ring, log, c + 1)
        if elim.sign < 0:
            values = [ring.neg(v) for v in values]
        columns.append(tuple(values))
    return DeterminantVector(
        delta=elim.determinant,
        columns=tuple(columns),
        trace=tuple(log) if log is not None else None,
    )


def determinant(A: DenseMatrix) -> RingElement:
    """``det(A)``; zero for singular input."""
    if not A.is_square:
        raise ShapeMismatch(f"expected a square matrix, got {A.rows}x{A.cols}")
    return forward_eliminate(augment(A, [A.ring.zero] * A.rows)).determinant


def solve(A: DenseMatrix, b: Sequence[RingElement]) -> ExactSolution:
    """Solve ``A x = b`` exactly, returning ``delta``, the Cramer numerators and ``x``."""
    dv = back_substitute(forward_eliminate(augment(A, b)))
    ring = A.ring
    cramer = dv.columns[0]
    return ExactSolution(
        delta=dv.delta,
        cramer=cramer,
        solution=tuple(ring.reduce_fraction(d, dv.delta) for d in cramer),
    )


def adjugate(A: DenseMatrix) -> AdjugateResult:
    """Adjugate ``P`` with ``A P = P A = det(A) I``; rejects singular ``A``."""
    dv = back_substitute(forward_eliminate(augment_identity(A)))
    n = A.rows
    # column j of the identity block yields column j of P
    entries = tuple(tuple(dv.columns[j][k] for j in range(n)) for k in range(n))
    return AdjugateResult(delta=dv.delta, adjugate=DenseMatrix(A.ring, entries))
