from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, strategies as st

from apolar.errors import AmbientMismatch, NotHomogeneous, ParseError
from apolar.poly import Poly, diff, format_poly, monomials, parse_poly


def x(n, i):
    return Poly.variable(n, i)


def test_monomial_order():
    assert monomials(2, 2) == ((2, 0), (1, 1), (0, 2))
    assert monomials(3, 1) == ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    assert len(monomials(4, 3)) == 20


def test_diff_examples():
    x1, x2 = x(2, 0), x(2, 1)
    assert diff(x1, x1 ** 2) == 2 * x1
    assert diff(x1 * x2, x1 ** 2 * x2) == 2 * x1
    assert diff(x2, x1 ** 3) == Poly(2)
    assert diff(x1 ** 3, x1 ** 3) == Poly.constant(2, 6)
    # contraction on a non-monomial
    assert diff(x1 + x2, x1 * x2) == x1 + x2


def test_diff_ambient_mismatch():
    with pytest.raises(AmbientMismatch):
        diff(x(2, 0), x(3, 0))


small = st.fractions(min_value=-3, max_value=3, max_denominator=3)


@st.composite
def forms(draw, n=3, max_deg=3):
    terms = draw(st.dictionaries(st.tuples(*[st.integers(0, max_deg)] * n), small, max_size=5))
    return Poly(n, terms)


@given(forms(), forms(), forms())
def test_diff_is_an_action(f, g, h):
    # differentiating by f*g is differentiating by g first, then by f
    assert diff(f * g, h) == diff(f, diff(g, h))
    assert diff(f + g, h) == diff(f, h) + diff(g, h)


@given(st.lists(st.integers(-3, 3), min_size=3, max_size=3),
       st.lists(st.integers(-3, 3), min_size=3, max_size=3),
       st.integers(0, 5))
def test_apolar_pairing_of_powers(p, q, k):
    lhs = diff(Poly.linear_power(p, k), Poly.linear_power(q, k))
    dot = sum(a * b for a, b in zip(p, q))
    assert lhs == Poly.constant(3, factorial(k) * dot ** k)


@given(st.lists(small, min_size=1, max_size=4), st.integers(0, 4))
def test_linear_power_matches_repeated_product(a, d):
    assert Poly.linear_power(a, d) == Poly.linear_form(a) ** d


@given(forms())
def test_format_parse_round_trip(f):
    assert parse_poly(format_poly(f), 3) == f


def test_parse_examples():
    f = parse_poly("x1^2*x2 + 1/2*x3^3")
    assert f.n == 3
    assert f.coefficient((2, 1, 0)) == 1
    assert f.coefficient((0, 0, 3)) == Fraction(1, 2)
    assert parse_poly("-x1 + 2*x2", 2) == Poly(2, {(1, 0): -1, (0, 1): 2})
    assert format_poly(parse_poly("3 - x1")) == "-x1 + 3"


@pytest.mark.parametrize("bad", ["", "x0", "x1^", "2**x1", "y1", "x1 + + x2"])
def test_parse_errors(bad):
    with pytest.raises(ParseError):
        parse_poly(bad)


def test_parse_too_few_variables():
    with pytest.raises(ParseError):
        parse_poly("x3", 2)


def test_homogeneity():
    assert parse_poly("x1^2 + x1*x2").homogeneous_degree() == 2
    with pytest.raises(NotHomogeneous):
        parse_poly("x1^2 + x2").homogeneous_degree()


def test_permute():
    f = parse_poly("x1^2*x2", 3)
    assert f.permute((1, 2, 0)) == parse_poly("x2^2*x3", 3)
