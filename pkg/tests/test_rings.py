import pytest

from gradedreg.errors import (ContextError, PresentationNotMinimalError, SearchExhaustedError,
                              UnsupportedInputError, ZeroRingError)
from gradedreg.groebner import gb, ideal_quotient
from gradedreg.poly import PolyRing
from gradedreg.rings import (RingElement, embedding_dim, find_nonzerodivisor, is_nonzerodivisor,
                             presentation, quotient_by, validate)

from conftest import ring


def test_validate_examples():
    A = presentation(["x"], ["x^2"], p=7)
    assert A.dim == 0 and A.p == 7
    with pytest.raises(PresentationNotMinimalError):
        presentation(["x", "y"], ["x - y"], p=7)
    B = presentation(["x", "y"], [], p=7)
    assert B.dim == 2


def test_validate_errors():
    with pytest.raises(UnsupportedInputError):
        presentation(["x", "y"], ["x^2 + y"])
    with pytest.raises(ZeroRingError):
        presentation(["x"], ["1"])
    with pytest.raises(ZeroRingError):
        presentation(["x", "y"], ["x^2", "3"])


def test_zero_generators_are_dropped():
    A = presentation(["x", "y"], ["x*y - y*x", "x*y"])
    assert len(A.gens) == 1


def test_cached_fields():
    A = ring("xyz", ["x^2 + y*z"])
    assert A.hilbert_prefix(5) == [1, 3, 5, 7, 9, 11]
    assert A.dim == 2
    assert A.nvars == 3 and A.vars == ("x", "y", "z")


def test_embedding_dim_examples(rings):
    assert embedding_dim(rings["xy/xy"]) == 2
    assert embedding_dim(rings["x"]) == 1
    assert embedding_dim(rings["quadric"]) == 3
    for A in rings.values():
        assert embedding_dim(A) >= A.dim


def test_ring_elements_are_normal_forms(rings):
    A = rings["x2"]
    e = A.element("x^3 + x")
    assert str(e) == "x"
    assert A.element("x^2").is_zero()
    assert A.element("x + x^2") == A.element("x")
    with pytest.raises(ContextError):
        RingElement(A, PolyRing(["y"]).var(0))


def test_nonzerodivisor_examples(rings):
    A = rings["xy"]
    assert str(find_nonzerodivisor(A)) == "x"
    B = rings["xy/xy"]
    x, y = B.ring.gens()
    assert ideal_quotient(B.gb, x) == gb([y])
    assert not is_nonzerodivisor(B, x)
    assert is_nonzerodivisor(B, x + y)
    g = find_nonzerodivisor(B)
    assert g.degree() == 1 and is_nonzerodivisor(B, g)
    assert g.rep not in (x, y)


def test_nonzerodivisor_search_exhausted(rings):
    with pytest.raises(SearchExhaustedError):
        find_nonzerodivisor(rings["x2xy"])
    with pytest.raises(SearchExhaustedError):
        find_nonzerodivisor(rings["k"])


def test_nonzerodivisor_search_is_seeded(rings):
    B = rings["xy/xy"]
    assert find_nonzerodivisor(B, seed=5) == find_nonzerodivisor(B, seed=5)


def test_quotient_examples(rings):
    A2 = quotient_by(rings["xy"], rings["xy"].ring.var(0))
    assert A2.vars == ("y",) and not A2.gens
    B2 = quotient_by(rings["xy/xy"], rings["xy/xy"].ring.parse("x + y"))
    assert B2.vars == ("x",) and [str(g) for g in B2.gens] == ["x^2"]
    C = ring("xyz", ["x*y - z^2"])
    C2 = quotient_by(C, C.ring.var(2))
    assert C2.vars == ("x", "y") and [str(g) for g in C2.gens] == ["x*y"]


def test_quotient_drops_dimension(rings):
    for key in ("x", "xy", "xyz", "xy/xy", "quadric"):
        A = rings[key]
        g = find_nonzerodivisor(A)
        assert quotient_by(A, g).dim == A.dim - 1


def test_quotient_rejects_non_linear(rings):
    A = rings["xy"]
    with pytest.raises(ValueError):
        quotient_by(A, A.ring.parse("x^2"))
    with pytest.raises(ValueError):
        quotient_by(A, A.ring.zero())
