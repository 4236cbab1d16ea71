import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ffelim import ring as R
from ffelim.errors import DivisionByZero, ExactDivisionViolation, MixedRings
from ffelim.ring import ZZ, ZZX, Poly

X = Poly.x()

ints = st.integers(min_value=-(10**40), max_value=10**40)
nonzero_ints = ints.filter(lambda v: v != 0)
polys = st.lists(st.integers(-50, 50), max_size=6).map(Poly)
nonzero_polys = polys.filter(bool)


def test_integer_arith_examples():
    assert R.arith(2, 3, "add") == 5
    assert R.arith(0, 7, "sub") == -7
    assert R.arith(10**30, 10**30, "mul") == 10**60


def test_polynomial_product():
    assert R.arith(X + 1, X - 1, "mul") == Poly([-1, 0, 1])


def test_mixed_rings_rejected():
    with pytest.raises(MixedRings):
        R.arith(2, X, "add")
    with pytest.raises(MixedRings):
        ZZ.arith(2, 2.0, "mul")
    with pytest.raises(MixedRings):
        R.exact_div(X, 1)


def test_unknown_op():
    with pytest.raises(ValueError):
        ZZ.arith(1, 2, "div")


def test_exact_div_examples():
    assert R.exact_div(34, 2) == 17
    assert R.exact_div(X * X - 1, X - 1) == X + 1
    with pytest.raises(ExactDivisionViolation):
        R.exact_div(7, 2)


def test_exact_div_negative_integers():
    assert ZZ.exact_div(-34, 2) == -17
    assert ZZ.exact_div(34, -2) == -17


@pytest.mark.parametrize(
    "a, b",
    [
        (Poly([1, 0, 1]), Poly([1, 1])),  # remainder 2
        (Poly([1, 3]), Poly([0, 2])),  # inexact leading coefficient
        (Poly([5]), Poly([0, 1])),  # divisor degree too high
    ],
)
def test_poly_exact_div_violation(a, b):
    with pytest.raises(ExactDivisionViolation):
        ZZX.exact_div(a, b)


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        ZZ.exact_div(1, 0)
    with pytest.raises(DivisionByZero):
        ZZX.exact_div(X, ZZX.zero)
    with pytest.raises(DivisionByZero):
        R.reduce_fraction(3, 0)


def test_zero_divided_is_zero():
    assert ZZX.exact_div(ZZX.zero, X + 2) == ZZX.zero


def test_reduce_fraction_examples():
    assert str(R.reduce_fraction(17, 17)) == "1/1"
    f = R.reduce_fraction(-6, -4)
    assert (f.numerator, f.denominator, f.reduced) == (3, 2, True)
    assert str(R.reduce_fraction(0, 5)) == "0/1"
    assert str(R.reduce_fraction(6, -4)) == "-3/2"


def test_poly_fraction_is_unreduced():
    f = R.reduce_fraction(X * X - 1, X - 1)
    assert not f.reduced
    assert f.numerator == X * X - 1 and f.denominator == X - 1


@pytest.mark.parametrize(
    "p, text",
    [
        (Poly([1, -1, 3]), "3*x^2 - x + 1"),
        (Poly([]), "0"),
        (Poly([-1]), "-1"),
        (Poly([0, 1]), "x"),
        (Poly([0, -1, 0, 1]), "x^3 - x"),
        (Poly([-4, 0, -1]), "-x^2 - 4"),
        (Poly([1, 2]), "2*x + 1"),
    ],
)
def test_poly_canonical_display(p, text):
    assert str(p) == text


def test_poly_trims_and_compares():
    assert Poly([1, 2, 0, 0]) == Poly([1, 2])
    assert Poly([3]) == 3
    assert hash(Poly([1, 2, 0])) == hash(Poly([1, 2]))
    assert Poly([0, 0]).degree == -1


def test_poly_is_immutable():
    with pytest.raises(AttributeError):
        X.coeffs = (1,)


def test_integer_parse():
    assert ZZ.parse("-120") == -120
    for bad in ("+3", "1.0", "", "--1", "1e3"):
        with pytest.raises(ValueError):
            ZZ.parse(bad)


def test_ring_identities():
    for ring in (ZZ, ZZX):
        assert ring.is_zero(ring.zero)
        assert not ring.is_zero(ring.one)
        assert ring.mul(ring.one, ring.one) == ring.one


@settings(max_examples=1000, deadline=None)
@given(ints, nonzero_ints)
def test_int_division_round_trip(a, b):
    assert ZZ.exact_div(ZZ.mul(a, b), b) == a


@settings(max_examples=1000, deadline=None)
@given(polys, nonzero_polys)
def test_poly_division_round_trip(a, b):
    assert ZZX.exact_div(ZZX.mul(a, b), b) == a


@settings(max_examples=300, deadline=None)
@given(nonzero_ints, nonzero_ints, nonzero_polys, nonzero_polys)
def test_no_zero_divisors(a, b, p, q):
    assert ZZ.mul(a, b) != 0
    assert not ZZX.is_zero(ZZX.mul(p, q))


@settings(max_examples=300, deadline=None)
@given(polys, polys, polys)
def test_poly_ring_axioms(a, b, c):
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + ZZX.zero == a and a * ZZX.one == a
    assert (a - b) + b == a


@settings(max_examples=300, deadline=None)
@given(polys, st.integers(-5, 5))
def test_poly_evaluation_is_a_homomorphism(a, v):
    b = a * a + 1
    assert (a * b)(v) == a(v) * b(v)


@settings(max_examples=500, deadline=None)
@given(st.integers(-1000, 1000), nonzero_ints.filter(lambda v: abs(v) < 10**6), nonzero_ints)
def test_reduce_fraction_scale_invariant(p, q, k):
    base = R.reduce_fraction(p, q)
    assert R.reduce_fraction(p * k, q * k) == base
    assert base.denominator > 0
    assert ZZ.gcd(abs(base.numerator), base.denominator) == 1
