"""Fraction-free Gaussian elimination over integral commutative rings."""

from .backsolve import (
    AdjugateResult,
    DeterminantVector,
    ExactSolution,
    adjugate,
    back_substitute,
    determinant,
    solve,
)
from .elimination import (
    EliminationResult,
    EliminationTrace,
    elimination_step,
    find_pivot,
    forward_eliminate,
)
from .errors import (
    DivisionByZero,
    EmptyInput,
    ExactDivisionViolation,
    FFElimError,
    IndexOutOfRange,
    InputError,
    MixedRings,
    ParseError,
    RaggedInput,
    ShapeMismatch,
    SingularMatrix,
    TooLarge,
    ZeroPivot,
)
from .matrix import AugmentedSystem, DenseMatrix, augment, augment_identity, from_rows, swap_rows
from .ring import ZZ, ZZX, IntegerRing, Poly, PolynomialRing, ReducedFraction, Ring

__version__ = "0.1.0"
