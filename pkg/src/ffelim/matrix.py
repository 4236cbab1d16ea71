"""Dense matrices over a ring and the augmented systems fed to elimination.

Public functions taking a row or column index use 1-based indices, as in the
usual ``a_ij`` notation. ``entries`` itself is a plain tuple of tuples and is
indexed from 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import EmptyInput, IndexOutOfRange, RaggedInput, ShapeMismatch
from .ring import ZZ, ZZX, Poly, Ring, RingElement

Grid = tuple[tuple[RingElement, ...], ...]


@dataclass(frozen=True)
class DenseMatrix:
    ring: Ring
    entries: Grid

    def __post_init__(self) -> None:
        if not self.entries or not self.entries[0]:
            raise EmptyInput("matrix must have at least one row and one column")
        width = len(self.entries[0])
        for r, row in enumerate(self.entries, start=1):
            if len(row) != width:
                raise RaggedInput(f"row {r} has {len(row)} entries, expected {width}")

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def column(self, j: int) -> tuple[RingElement, ...]:
        """Column ``j`` (1-based)."""
        _check_index(j, self.cols, "column")
        return tuple(row[j - 1] for row in self.entries)

    def to_lists(self) -> list[list[RingElement]]:
        return [list(row) for row in self.entries]

    def __str__(self) -> str:
        return "\n".join(" ".join(self.ring.to_str(x) for x in row) for row in self.entries)


@dataclass(frozen=True)
class AugmentedSystem:
    """An ``n x (n+m)`` matrix: coefficient block followed by ``m`` extra columns."""

    n: int
    m: int
    body: DenseMatrix

    def __post_init__(self) -> None:
        if self.n < 1 or self.m < 1:
            raise ShapeMismatch(f"need n >= 1 and m >= 1, got n={self.n}, m={self.m}")
        if self.body.shape != (self.n, self.n + self.m):
            raise ShapeMismatch(
                f"body is {self.body.rows}x{self.body.cols}, expected {self.n}x{self.n + self.m}"
            )

    @property
    def ring(self) -> Ring:
        return self.body.ring

    @property
    def entries(self) -> Grid:
        return self.body.entries

    def coefficient_block(self) -> DenseMatrix:
        return DenseMatrix(self.ring, tuple(row[: self.n] for row in self.entries))

    def augmented_block(self) -> DenseMatrix:
        return DenseMatrix(self.ring, tuple(row[self.n :] for row in self.entries))


def _check_index(i: int, size: int, what: str) -> None:
    if not isinstance(i, int) or not 1 <= i <= size:
        raise IndexOutOfRange(f"{what} index {i} outside 1..{size}")


def _infer_ring(values: Sequence[RingElement]) -> Ring:
    if all(ZZ.contains(v) for v in values):
        return ZZ
    return ZZX if any(isinstance(v, Poly) for v in values) else ZZ


def from_rows(rows: Sequence[Sequence[RingElement]], ring: Ring | None = None) -> DenseMatrix:
    """Build a matrix from nested sequences.

    Without an explicit ``ring`` the entries decide: all ``int`` gives
    :data:`~ffelim.ring.ZZ`, any :class:`~ffelim.ring.Poly` gives
    :data:`~ffelim.ring.ZZX` (integers are lifted to constants).
    """
    if not rows or not rows[0]:
        raise EmptyInput("matrix must have at least one row and one column")
    width = len(rows[0])
    for r, row in enumerate(rows, start=1):
        if len(row) != width:
            raise RaggedInput(f"row {r} has {len(row)} entries, expected {width}")
    if ring is None:
        ring = _infer_ring([x for row in rows for x in row])
    return DenseMatrix(ring, tuple(tuple(ring.convert(x) for x in row) for row in rows))


def identity(n: int, ring: Ring = ZZ) -> DenseMatrix:
    one, zero = ring.one, ring.zero
    return DenseMatrix(ring, tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n)))


def _require_square(A: DenseMatrix) -> None:
    if not A.is_square:
        raise ShapeMismatch(f"expected a square matrix, got {A.rows}x{A.cols}")


def augment(A: DenseMatrix, b: Sequence[RingElement]) -> AugmentedSystem:
    """``[A | b]`` for a single right-hand side."""
    _require_square(A)
    if len(b) != A.rows:
        raise ShapeMismatch(f"right-hand side has {len(b)} entries, expected {A.rows}")
    ring = A.ring
    body = tuple(row + (ring.convert(v),) for row, v in zip(A.entries, b))
    return AugmentedSystem(A.rows, 1, DenseMatrix(ring, body))


def augment_identity(A: DenseMatrix) -> AugmentedSystem:
    """``[A | I]``, the system whose back-substitution yields the adjugate."""
    _require_square(A)
    eye = identity(A.rows, A.ring)
    body = tuple(a + e for a, e in zip(A.entries, eye.entries))
    return AugmentedSystem(A.rows, A.rows, DenseMatrix(A.ring, body))


def swap_rows(M: AugmentedSystem, i: int, j: int) -> AugmentedSystem:
    _check_index(i, M.n, "row")
    _check_index(j, M.n, "row")
    if i == j:
        return M
    rows = list(M.entries)
    rows[i - 1], rows[j - 1] = rows[j - 1], rows[i - 1]
    return AugmentedSystem(M.n, M.m, DenseMatrix(M.ring, tuple(rows)))


def matmul(A: DenseMatrix, B: DenseMatrix) -> DenseMatrix:
    if A.cols != B.rows:
        raise ShapeMismatch(f"cannot multiply {A.rows}x{A.cols} by {B.rows}x{B.cols}")
    ring = A.ring
    cols = list(zip(*B.entries))
    out = []
    for row in A.entries:
        new_row = []
        for col in cols:
            acc = ring.zero
            for a, b in zip(row, col):
                acc = ring.add(acc, ring.mul(a, b))
            new_row.append(acc)
        out.append(tuple(new_row))
    return DenseMatrix(ring, tuple(out))


def scale(A: DenseMatrix, c: RingElement) -> DenseMatrix:
    ring = A.ring
    return DenseMatrix(ring, tuple(tuple(ring.mul(c, x) for x in row) for row in A.entries))
