import pytest

from gradedreg.errors import ContextError, ParseError
from gradedreg.poly import (DEGREVLEX, PolyRing, TermOrder, degrevlex_key, mono_divides,
                            mono_lcm, mono_mul, monomials_of_degree, parse_poly)


@pytest.fixture
def R7():
    return PolyRing(["x", "y"], 7)


def test_arith_examples(R7):
    x, y = R7.gens()
    assert (x + y) + (x - y) == x.scale(2)
    assert str((x + y) + (x - y)) == "2*x"
    assert (x + y) * (x - y) == x * x - y * y
    one = R7.one()
    assert (one * 7 - 7).is_zero()
    assert (one * 7 - 7).terms == ()


def test_canonical_form(R7):
    f = R7.from_terms([((0, 1), 3), ((1, 0), 2), ((0, 1), 4), ((2, 0), 0)])
    # y coefficients cancel mod 7, zero coefficient dropped
    assert f.terms == (((1, 0), 2),)
    g = parse_poly("y^2 + x*y + x^2", R7)
    assert [m for m, _ in g.terms] == [(2, 0), (1, 1), (0, 2)]


def test_context_error():
    a = PolyRing(["x", "y"], 7).var(0)
    b = PolyRing(["x", "y"], 11).var(0)
    c = PolyRing(["x", "z"], 7).var(0)
    for other in (b, c):
        with pytest.raises(ContextError):
            a + other
        with pytest.raises(ContextError):
            a * other


def test_homogeneous_products():
    R = PolyRing(["x", "y", "z"])
    f = parse_poly("x^2 + y*z", R)
    g = parse_poly("x - 2*y", R)
    h = f * g
    assert h.is_homogeneous() and h.degree() == 3
    assert not (f + g).is_homogeneous()
    assert R.zero().degree() == -1


def test_parse_and_print_round_trip():
    R = PolyRing(["x", "y", "z"])
    for text in ["x*y - 3*z^2", "x^2 + y*z", "-x", "2*x^3*y - y^4 + 5", "0", "1"]:
        f = parse_poly(text, R)
        assert parse_poly(str(f), R) == f
    assert str(parse_poly("x*y - 3*z^2", R)) == "x*y - 3*z^2"
    assert parse_poly("(x+y)^2", R) == parse_poly("x^2 + 2*x*y + y^2", R)
    assert parse_poly("32004*x", R) == parse_poly("x", R)
    assert parse_poly("-(x - y)*2", R) == parse_poly("2*y - 2*x", R)


@pytest.mark.parametrize("text,col", [("x + ", 5), ("x + w", 5), ("x ** 2", 4), ("3x", 2), ("(x + y", 7), ("x^y", 3)])
def test_parse_errors_have_columns(text, col):
    R = PolyRing(["x", "y"])
    with pytest.raises(ParseError) as info:
        parse_poly(text, R)
    assert info.value.column == col


def test_monomial_helpers():
    assert mono_mul((1, 2), (3, 0)) == (4, 2)
    assert mono_divides((1, 0), (1, 2)) and not mono_divides((2, 0), (1, 2))
    assert mono_lcm((1, 3), (2, 0)) == (2, 3)
    with pytest.raises(OverflowError):
        mono_mul((2**14,), (2**14,))
    assert len(monomials_of_degree(3, 2)) == 6
    assert monomials_of_degree(0, 0) == [()] and monomials_of_degree(0, 1) == []


def test_degrevlex_examples():
    # x > y > z; degrevlex: x*z < y^2 since z appears
    key = degrevlex_key
    assert key((1, 0, 1)) < key((0, 2, 0))
    assert key((0, 0, 3)) > key((1, 0, 0))
    assert key((2, 0, 0)) > key((1, 1, 0)) > key((0, 2, 0)) > key((1, 0, 1))
    assert key((0, 0, 2)) > key((1, 0, 0))


def test_module_order_blocks_and_shifts():
    order = TermOrder(shifts=(0, 2), blocks=(0, 1))
    # block 0 dominates regardless of degree
    assert order.key(0, (0, 0)) > order.key(1, (5, 5))
    plain = TermOrder(shifts=(0, 2))
    assert plain.key(1, (1, 0)) > plain.key(0, (2, 0))
    assert plain.key(1, (0, 0)) > plain.key(0, (1, 0))
    assert DEGREVLEX.key(0, (1, 0)) > DEGREVLEX.key(0, (0, 1))
