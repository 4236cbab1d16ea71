"""Forward elimination to triangular form without leaving the ring.

At step ``k`` every row below the pivot is combined as

    new(i, j) = (pivot * old(i, j) - old(i, k) * old(k, j)) / previous_pivot

and the division is always exact: after step ``k`` entry ``(i, j)`` is the
determinant of the leading ``k x k`` block bordered by row ``i`` and column
``j`` (a bordered minor), so the diagonal ends up holding the leading
principal minors and the last pivot is the determinant.

Rows are swapped when the pivot position holds zero. A column that is zero
from the pivot down means the determinant is zero, and elimination stops.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import ZeroPivot
from .matrix import AugmentedSystem, DenseMatrix, _check_index
from .ring import Ring, RingElement


@dataclass(frozen=True)
class TraceStep:
    """Snapshot taken after elimination step ``k`` (``k == 0``: the input).

    ``swapped_from`` is the 1-based row exchanged into position ``k`` before
    the step, if any. ``permutation`` is the row order at that moment.
    """

    k: int
    swapped_from: int | None
    permutation: tuple[int, ...]
    matrix: AugmentedSystem


@dataclass(frozen=True)
class EliminationTrace:
    steps: tuple[TraceStep, ...]


@dataclass(frozen=True)
class EliminationResult:
    """Outcome of :func:`forward_eliminate`.

    ``permutation[r]`` is the 1-based index of the input row that ended up in
    row ``r + 1``; ``sign`` is its parity. When ``singular`` is set the
    elimination stopped early, ``triangular`` is only partially reduced and the
    trailing leading minors are reported as zero.
    """

    triangular: AugmentedSystem
    leading_minors: tuple[RingElement, ...]
    sign: int
    permutation: tuple[int, ...]
    singular: bool = False
    trace: EliminationTrace | None = None

    @property
    def ring(self) -> Ring:
        return self.triangular.ring

    @property
    def determinant(self) -> RingElement:
        last = self.leading_minors[-1]
        return last if self.sign == 1 else self.ring.neg(last)


def eliminate_row(
    pivot_row: Sequence[RingElement],
    row: Sequence[RingElement],
    k: int,
    prev_minor: RingElement,
    ring: Ring,
) -> list[RingElement]:
    """Reduce one row against the pivot row at step ``k`` (1-based).

    Reads only ``pivot_row`` and ``row``, so rows of one step can be
    processed in any order.
    """
    c = k - 1
    pivot = pivot_row[c]
    factor = row[c]
    mul, sub, div = ring.mul, ring.sub, ring.exact_div
    out = list(row[:c])
    out.append(ring.zero)
    if ring.is_zero(factor):
        out.extend(div(mul(pivot, x), prev_minor) for x in row[k:])
    else:
        out.extend(
            div(sub(mul(pivot, x), mul(factor, y)), prev_minor)
            for x, y in zip(row[k:], pivot_row[k:])
        )
    return out


def _pivot_index(rows: Sequence[Sequence[RingElement]], k: int, ring: Ring) -> int | None:
    c = k - 1
    for i in range(c, len(rows)):
        if not ring.is_zero(rows[i][c]):
            return i + 1
    return None


def find_pivot(B: AugmentedSystem, k: int) -> int | None:
    """Smallest 1-based row ``i >= k`` with a nonzero entry in column ``k``."""
    _check_index(k, B.n, "step")
    return _pivot_index(B.entries, k, B.ring)


def elimination_step(B: AugmentedSystem, k: int, prev_minor: RingElement) -> AugmentedSystem:
    """Apply step ``k`` to ``B``, whose rows ``1..k`` are already final.

    ``prev_minor`` is the pivot of step ``k - 1``, or the ring's one at
    ``k == 1``. Raises :class:`ZeroPivot` if entry ``(k, k)`` is zero.
    """
    _check_index(k, B.n, "step")
    ring = B.ring
    rows = B.entries
    pivot_row = rows[k - 1]
    if ring.is_zero(pivot_row[k - 1]):
        raise ZeroPivot(f"entry ({k},{k}) is zero")
    new = list(rows[:k])
    new.extend(tuple(eliminate_row(pivot_row, r, k, prev_minor, ring)) for r in rows[k:])
    return AugmentedSystem(B.n, B.m, DenseMatrix(ring, tuple(new)))


def _freeze(rows: list[list[RingElement]], n: int, m: int, ring: Ring) -> AugmentedSystem:
    return AugmentedSystem(n, m, DenseMatrix(ring, tuple(tuple(r) for r in rows)))


def forward_eliminate(system: AugmentedSystem, trace: bool = False) -> EliminationResult:
    """Reduce ``system`` to upper-triangular form.

    With ``trace=True`` a snapshot of the matrix after every step is kept in
    the result (memory grows as ``n`` full copies).
    """
    ring, n, m = system.ring, system.n, system.m
    rows = [list(r) for r in system.entries]
    perm = list(range(1, n + 1))
    sign = 1
    prev = ring.one
    minors: list[RingElement] = []
    singular = False
    steps = [TraceStep(0, None, tuple(perm), system)] if trace else None

    for k in range(1, n + 1):
        c = k - 1
        p = _pivot_index(rows, k, ring)
        if p is None:
            singular = True
            minors.extend(ring.zero for _ in range(k, n + 1))
            break
        swapped = None
        if p != k:
            rows[c], rows[p - 1] = rows[p - 1], rows[c]
            perm[c], perm[p - 1] = perm[p - 1], perm[c]
            sign = -sign
            swapped = p
        pivot = rows[c][c]
        minors.append(pivot)
        if k == n:
            break
        pivot_row = rows[c]
        for i in range(k, n):
            rows[i] = eliminate_row(pivot_row, rows[i], k, prev, ring)
        prev = pivot
        if steps is not None:
            steps.append(TraceStep(k, swapped, tuple(perm), _freeze(rows, n, m, ring)))

    return EliminationResult(
        triangular=_freeze(rows, n, m, ring),
        leading_minors=tuple(minors),
        sign=sign,
        permutation=tuple(perm),
        singular=singular,
        trace=EliminationTrace(tuple(steps)) if steps is not None else None,
    )
