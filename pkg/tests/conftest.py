from __future__ import annotations

import itertools
import random

import pytest

from ffelim.matrix import DenseMatrix, from_rows
from ffelim.ring import ZZ, ZZX, Poly


def perm_det(rows, ring=ZZ):
    """Leibniz permutation-sum determinant; independent of the cofactor oracle."""
    n = len(rows)
    total = ring.zero
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for a, b in itertools.combinations(perm, 2) if a > b)
        term = ring.one
        for i, p in enumerate(perm):
            term = ring.mul(term, rows[i][p])
        total = ring.sub(total, term) if inversions % 2 else ring.add(total, term)
    return total


def random_int_matrix(rng: random.Random, n: int, lo: int = -9, hi: int = 9) -> DenseMatrix:
    return from_rows([[rng.randint(lo, hi) for _ in range(n)] for _ in range(n)])


def random_vector(rng: random.Random, n: int, lo: int = -9, hi: int = 9) -> list[int]:
    return [rng.randint(lo, hi) for _ in range(n)]


def random_poly(rng: random.Random, degree: int = 2, bound: int = 3) -> Poly:
    return Poly(rng.randint(-bound, bound) for _ in range(degree + 1))


def random_poly_matrix(rng: random.Random, n: int = 3) -> DenseMatrix:
    return from_rows([[random_poly(rng) for _ in range(n)] for _ in range(n)], ZZX)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240601)
