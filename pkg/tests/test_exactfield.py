from fractions import Fraction

import pytest
import sympy
from hypothesis import given

from su2five.exactfield import ONE, PHI, SQRT2, SQRT5, SQRT10, ZERO, FieldElement, parse_field_element

from conftest import field_elements, nonzero_field_elements


def to_sympy(x: FieldElement):
    c0, c1, c2, c3 = (sympy.Rational(c.numerator, c.denominator) for c in x.coords)
    return c0 + c1 * sympy.sqrt(2) + c2 * sympy.sqrt(5) + c3 * sympy.sqrt(10)


def test_radical_products():
    assert SQRT2 * SQRT2 == 2
    assert SQRT5 * SQRT5 == 5
    assert SQRT2 * SQRT5 == SQRT10
    assert SQRT10 * SQRT2 == 2 * SQRT5
    assert SQRT10 * SQRT5 == 5 * SQRT2
    assert SQRT10 * SQRT10 == 10


def test_golden_ratio_inverse():
    expected = FieldElement(Fraction(-1, 2), 0, Fraction(1, 2))
    assert PHI.inverse() == expected
    assert PHI * expected == ONE
    assert PHI * PHI == PHI + 1


def test_inverse_of_zero_raises():
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO


def test_str_shows_all_terms():
    assert str(FieldElement(1, Fraction(-1, 2))) == "1 + -1/2*r2 + 0*r5 + 0*r10"


@pytest.mark.parametrize(
    "text, coords",
    [
        ("1 + r2", (1, 1, 0, 0)),
        ("-r10 + 3/4", (Fraction(3, 4), 0, 0, -1)),
        ("2*r5 - 1/2*r2", (0, Fraction(-1, 2), 2, 0)),
        ("0", (0, 0, 0, 0)),
    ],
)
def test_parse(text, coords):
    assert parse_field_element(text).coords == tuple(Fraction(c) for c in coords)


@pytest.mark.parametrize("bad", ["", "r3", "1 +", "x", "1/0*r2 r5"])
def test_parse_rejects(bad):
    with pytest.raises((ValueError, ZeroDivisionError)):
        parse_field_element(bad)


@given(field_elements)
def test_str_parse_round_trip(x):
    assert parse_field_element(str(x)) == x


@given(field_elements, field_elements)
def test_product_matches_sympy(x, y):
    assert sympy.simplify(to_sympy(x * y) - sympy.expand(to_sympy(x) * to_sympy(y))) == 0


@given(field_elements, field_elements, field_elements)
def test_ring_axioms(x, y, z):
    assert x + y == y + x
    assert x * y == y * x
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x - x == ZERO


@given(nonzero_field_elements)
def test_inverse(x):
    assert x * x.inverse() == ONE
    assert (x ** -2) * x * x == ONE


@given(field_elements, field_elements)
def test_equality_and_hash_agree(x, y):
    if x == y:
        assert hash(x) == hash(y)
    assert (x == y) == (x.coords == y.coords)


@given(field_elements)
def test_rational_iff_irrational_parts_vanish(x):
    assert x.is_rational() == (x.coords[1:] == (0, 0, 0))
