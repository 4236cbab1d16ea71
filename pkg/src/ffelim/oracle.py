"""Brute-force reference routines built on cofactor expansion.

Nothing here touches the elimination code; only ring arithmetic and the
matrix containers are shared. Every routine costs factorial time and is
size-guarded.
"""

from __future__ import annotations

from typing import Sequence

from .errors import IndexOutOfRange, ShapeMismatch, TooLarge
from .matrix import AugmentedSystem, DenseMatrix, _check_index, augment
from .ring import Ring, RingElement

MAX_DET_ORDER = 10
MAX_ADJUGATE_ORDER = 8


def _laplace(grid: Sequence[Sequence[RingElement]], ring: Ring) -> RingElement:
    n = len(grid)
    if n == 0:
        return ring.one
    if n == 1:
        return grid[0][0]
    if n == 2:
        return ring.sub(ring.mul(grid[0][0], grid[1][1]), ring.mul(grid[0][1], grid[1][0]))
    total = ring.zero
    rest = grid[1:]
    for c, a in enumerate(grid[0]):
        if ring.is_zero(a):
            continue
        minor = [row[:c] + row[c + 1 :] for row in rest]
        term = ring.mul(a, _laplace(minor, ring))
        total = ring.add(total, term) if c % 2 == 0 else ring.sub(total, term)
    return total


def _det(grid: Sequence[Sequence[RingElement]], ring: Ring) -> RingElement:
    if len(grid) > MAX_DET_ORDER:
        raise TooLarge(f"cofactor expansion limited to order {MAX_DET_ORDER}, got {len(grid)}")
    return _laplace([tuple(r) for r in grid], ring)


def _square(A: DenseMatrix) -> int:
    if not A.is_square:
        raise ShapeMismatch(f"expected a square matrix, got {A.rows}x{A.cols}")
    return A.rows


def cofactor_det(A: DenseMatrix) -> RingElement:
    """Determinant by recursive first-row Laplace expansion."""
    _square(A)
    return _det(A.entries, A.ring)


def replace_column(A: DenseMatrix, j: int, v: Sequence[RingElement]) -> DenseMatrix:
    """Copy of ``A`` with column ``j`` (1-based) replaced by ``v``."""
    n = _square(A)
    _check_index(j, n, "column")
    if len(v) != n:
        raise ShapeMismatch(f"replacement column has {len(v)} entries, expected {n}")
    c = j - 1
    entries = tuple(
        row[:c] + (A.ring.convert(x),) + row[c + 1 :] for row, x in zip(A.entries, v)
    )
    return DenseMatrix(A.ring, entries)


def bordered_minor(system: AugmentedSystem, k: int, i: int, j: int) -> RingElement:
    """Order-``k`` minor on rows ``1..k-1, i`` and columns ``1..k-1, j``."""
    n, width = system.n, system.n + system.m
    if not 1 <= k <= n:
        raise IndexOutOfRange(f"order {k} outside 1..{n}")
    if not k <= i <= n:
        raise IndexOutOfRange(f"row {i} outside {k}..{n}")
    if not k <= j <= width:
        raise IndexOutOfRange(f"column {j} outside {k}..{width}")
    rows = [*range(k - 1), i - 1]
    cols = [*range(k - 1), j - 1]
    e = system.entries
    return _det([[e[r][c] for c in cols] for r in rows], system.ring)


def naive_adjugate(A: DenseMatrix) -> DenseMatrix:
    """Transposed cofactor matrix."""
    n = _square(A)
    if n > MAX_ADJUGATE_ORDER:
        raise TooLarge(f"naive adjugate limited to order {MAX_ADJUGATE_ORDER}, got {n}")
    ring = A.ring
    e = A.entries
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            # delete row j, column i
            minor = [r[:i] + r[i + 1 :] for t, r in enumerate(e) if t != j]
            d = _det(minor, ring)
            row.append(d if (i + j) % 2 == 0 else ring.neg(d))
        out.append(tuple(row))
    return DenseMatrix(ring, tuple(out))


def _power(ring: Ring, a: RingElement, e: int) -> RingElement:
    acc = ring.one
    for _ in range(e):
        acc = ring.mul(acc, a)
    return acc


def sylvester_check(A: DenseMatrix, s: int, rhs: Sequence[RingElement] | None = None) -> bool:
    """Check Sylvester's determinant identity at order ``s``.

    The matrix of order-``s`` bordered minors ``a_pq^s`` (``p, q = s..n``) must
    have determinant ``base**(n-s) * det(A)``, where ``base`` is the leading
    minor of order ``s - 1`` (one when ``s == 1``). With ``rhs`` given, the
    column-replaced forms are checked as well: swapping column ``j >= s`` for
    the minors bordered by the right-hand side yields
    ``base**(n-s) * det(A_j)``, ``A_j`` being ``A`` with column ``j``
    replaced by ``rhs``.
    """
    n = _square(A)
    if not 1 <= s <= n:
        raise IndexOutOfRange(f"order {s} outside 1..{n}")
    ring = A.ring
    B = augment(A, rhs if rhs is not None else [ring.zero] * n)
    base = ring.one if s == 1 else bordered_minor(B, s - 1, s - 1, s - 1)
    factor = _power(ring, base, n - s)

    idx = range(s, n + 1)
    M = [[bordered_minor(B, s, p, q) for q in idx] for p in idx]
    if not ring.eq(_det(M, ring), ring.mul(factor, _det(A.entries, ring))):
        return False
    if rhs is None:
        return True

    last = [bordered_minor(B, s, p, n + 1) for p in idx]
    for j in idx:
        c = j - s
        Mj = [row[:c] + [last[r]] + row[c + 1 :] for r, row in enumerate(M)]
        delta_j = _det(replace_column(A, j, rhs).entries, ring)
        if not ring.eq(_det(Mj, ring), ring.mul(factor, delta_j)):
            return False
    return True
