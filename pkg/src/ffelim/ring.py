"""Integral commutative rings with exact arithmetic.

Every algorithm in the package is generic over a :class:`Ring` object that
supplies the arithmetic; ring elements themselves are plain immutable values.
Two instances ship: :data:`ZZ` (Python ``int``) and :data:`ZZX` (univariate
polynomials with integer coefficients, :class:`Poly`).
"""

from __future__ import annotations

import math
import re
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterable

from .errors import DivisionByZero, ExactDivisionViolation, MixedRings

RingElement = Any

_INT_RE = re.compile(r"-?[0-9]+")


class Ring(ABC):
    """Contract for an integral commutative ring with unit."""

    name: str = "ring"

    @property
    @abstractmethod
    def zero(self) -> RingElement: ...

    @property
    @abstractmethod
    def one(self) -> RingElement: ...

    @abstractmethod
    def contains(self, x: object) -> bool:
        """True if ``x`` is already an element of this ring."""

    def convert(self, x: object) -> RingElement:
        if self.contains(x):
            return x
        raise MixedRings(f"{x!r} is not an element of {self.name}")

    # The hot-path operations below do no membership checks.
    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def is_zero(self, a) -> bool:
        return a == self.zero

    def eq(self, a, b) -> bool:
        return a == b

    @abstractmethod
    def exact_div(self, a, b):
        """Return ``q`` with ``q * b == a``; raise if ``b`` does not divide ``a``."""

    def to_str(self, a) -> str:
        return str(a)

    def arith(self, a, b, op: str):
        """Checked ``add``/``sub``/``mul`` that rejects foreign operands."""
        if not (self.contains(a) and self.contains(b)):
            raise MixedRings(f"operands of {op} are not both in {self.name}")
        try:
            fn = {"add": self.add, "sub": self.sub, "mul": self.mul}[op]
        except KeyError:
            raise ValueError(f"unknown operation {op!r}") from None
        return fn(a, b)

    def reduce_fraction(self, num, den) -> ReducedFraction:
        # No gcd available in general: keep the quotient as given.
        if self.is_zero(den):
            raise DivisionByZero("zero denominator")
        return ReducedFraction(num, den, reduced=False, ring=self)

    def __repr__(self) -> str:
        return self.name


class IntegerRing(Ring):
    """Arbitrary-precision integers."""

    name = "ZZ"

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def contains(self, x: object) -> bool:
        return isinstance(x, int) and not isinstance(x, bool)

    def is_zero(self, a: int) -> bool:
        return a == 0

    def exact_div(self, a: int, b: int) -> int:
        if b == 0:
            raise DivisionByZero(f"{a} / 0")
        q, r = divmod(a, b)
        if r:
            raise ExactDivisionViolation(f"{b} does not divide {a}")
        return q

    def gcd(self, a: int, b: int) -> int:
        return math.gcd(a, b)

    def reduce_fraction(self, num: int, den: int) -> ReducedFraction:
        if den == 0:
            raise DivisionByZero("zero denominator")
        g = math.gcd(num, den)
        if den < 0:
            g = -g
        return ReducedFraction(num // g, den // g, reduced=True, ring=self)

    def parse(self, text: str) -> int:
        if not _INT_RE.fullmatch(text):
            raise ValueError(f"not a decimal integer: {text!r}")
        return int(text)


class Poly:
    """Immutable polynomial over the integers.

    ``coeffs[k]`` is the coefficient of ``x**k``; trailing zeros are trimmed,
    so the zero polynomial has ``coeffs == ()``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()) -> None:
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def x(cls) -> Poly:
        return cls((0, 1))

    @classmethod
    def _lift(cls, other) -> Poly | None:
        if isinstance(other, Poly):
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return cls((other,))
        return None

    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self) -> int:
        return hash(("Poly", self.coeffs))

    def __neg__(self) -> Poly:
        return Poly(-c for c in self.coeffs)

    def __add__(self, other) -> Poly:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __sub__(self, other) -> Poly:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> Poly:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other) -> Poly:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if not a or not b:
            return Poly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return Poly(out)

    __rmul__ = __mul__

    def __call__(self, value):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                mono = "x" if k == 1 else f"x^{k}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            if not parts:
                parts.append(f"-{body}" if c < 0 else body)
            else:
                parts.append(f"- {body}" if c < 0 else f"+ {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Poly({list(self.coeffs)!r})"


class PolynomialRing(Ring):
    """ZZ[x], dense representation."""

    name = "ZZ[x]"

    _zero = Poly()
    _one = Poly((1,))

    @property
    def zero(self) -> Poly:
        return self._zero

    @property
    def one(self) -> Poly:
        return self._one

    def contains(self, x: object) -> bool:
        return isinstance(x, Poly)

    def convert(self, x: object) -> Poly:
        if isinstance(x, int) and not isinstance(x, bool):
            return Poly((x,))
        return super().convert(x)

    def is_zero(self, a: Poly) -> bool:
        return not a.coeffs

    def exact_div(self, a: Poly, b: Poly) -> Poly:
        if not b.coeffs:
            raise DivisionByZero(f"({a}) / 0")
        if not a.coeffs:
            return self._zero
        db = b.degree
        shift_max = a.degree - db
        if shift_max < 0:
            raise ExactDivisionViolation(f"{b} does not divide {a}")
        rem = list(a.coeffs)
        lead = b.coeffs[-1]
        q = [0] * (shift_max + 1)
        for shift in range(shift_max, -1, -1):
            c = rem[shift + db]
            if c == 0:
                continue
            qc, r = divmod(c, lead)
            if r:
                raise ExactDivisionViolation(f"{b} does not divide {a}")
            q[shift] = qc
            for i, bc in enumerate(b.coeffs):
                rem[shift + i] -= qc * bc
        if any(rem):
            raise ExactDivisionViolation(f"{b} does not divide {a}")
        return Poly(q)


@dataclass(frozen=True)
class ReducedFraction:
    """``numerator / denominator`` in the quotient field of ``ring``.

    ``reduced`` is False when the ring offers no gcd and the pair is kept as
    computed.
    """

    numerator: RingElement
    denominator: RingElement
    reduced: bool = True
    ring: Ring | None = field(default=None, compare=False, repr=False)

    def __str__(self) -> str:
        if isinstance(self.numerator, int) and isinstance(self.denominator, int):
            return f"{self.numerator}/{self.denominator}"
        return f"({self.numerator})/({self.denominator})"

    def to_fraction(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)


ZZ = IntegerRing()
ZZX = PolynomialRing()


def ring_of(x: object) -> Ring:
    """Return the shipped ring that ``x`` belongs to."""
    if ZZ.contains(x):
        return ZZ
    if ZZX.contains(x):
        return ZZX
    raise MixedRings(f"{x!r} is not an element of a known ring")


def _common_ring(a, b) -> Ring:
    ra, rb = ring_of(a), ring_of(b)
    if ra is not rb:
        raise MixedRings(f"{a!r} in {ra.name}, {b!r} in {rb.name}")
    return ra


def arith(a, b, op: str):
    return _common_ring(a, b).arith(a, b, op)


def exact_div(a, b):
    return _common_ring(a, b).exact_div(a, b)


def reduce_fraction(num, den) -> ReducedFraction:
    return _common_ring(num, den).reduce_fraction(num, den)
