"""Standard-graded local rings A = k[x_1..x_n]/I with m = (x_1..x_n)."""

import random

from .errors import (ContextError, PresentationNotMinimalError, SearchExhaustedError,
                     UnsupportedInputError, ZeroRingError)
from .groebner import gb as groebner_basis
from .groebner import hilbert_series, ideal_quotient, krull_dim, reduce_poly
from .poly import PolyRing, SparsePoly
from .strands import GradedQuotient

HILBERT_PREFIX = 12
SEARCH_SEED = 20250101


class RingPresentation:
    """A validated presentation; build it with :func:`validate`."""

    def __init__(self, ring, gens, gb, dim, hilbert, name=None):
        self.ring = ring
        self.gens = tuple(gens)
        self.gb = gb
        self.dim = dim
        self.hilbert = tuple(hilbert)
        self.name = name or "ring"
        self.graded = GradedQuotient(ring, gb)

    @property
    def p(self):
        return self.ring.p

    @property
    def vars(self):
        return self.ring.names

    @property
    def nvars(self):
        return self.ring.nvars

    def hilbert_prefix(self, D):
        if D < len(self.hilbert):
            return list(self.hilbert[: D + 1])
        return hilbert_series(self.gb, D)

    def element(self, f):
        if isinstance(f, str):
            f = self.ring.parse(f)
        return RingElement(self, f)

    def reduce(self, f):
        return reduce_poly(f, self.gb) if self.gb.generators else f

    def __eq__(self, other):
        return (isinstance(other, RingPresentation) and self.ring == other.ring
                and self.gb == other.gb)

    def __hash__(self):
        return hash((self.ring, tuple(g.terms for g in self.gb.generators)))

    def __repr__(self):
        gens = ", ".join(str(g) for g in self.gens)
        return f"<{self.name}: F_{self.p}[{','.join(self.vars)}]/({gens})>"


class RingElement:
    __slots__ = ("ring", "rep")

    def __init__(self, ring, f):
        if f.ring != ring.ring:
            raise ContextError(f"{f} does not belong to {ring!r}")
        self.ring = ring
        self.rep = ring.reduce(f)

    def __eq__(self, other):
        return isinstance(other, RingElement) and self.ring == other.ring and self.rep == other.rep

    def __hash__(self):
        return hash(self.rep)

    def is_zero(self):
        return self.rep.is_zero()

    def degree(self):
        return self.rep.degree()

    def __str__(self):
        return str(self.rep)

    def __repr__(self):
        return f"RingElement({self.rep})"


def validate(ring, gens, name=None, hilbert_degree=HILBERT_PREFIX):
    """Check and cache a presentation k[vars]/(gens)."""
    kept = []
    for g in gens:
        if g.is_zero():
            continue
        if not g.is_homogeneous():
            raise UnsupportedInputError(f"generator {g} is not homogeneous")
        d = g.degree()
        if d == 0:
            raise ZeroRingError(f"generator {g} is a unit; the ring is zero")
        if d == 1:
            raise PresentationNotMinimalError(
                f"generator {g} has degree 1; eliminate a variable first")
        kept.append(g)
    G = groebner_basis(kept, ring=ring)
    if G.is_unit():
        raise ZeroRingError("the ideal is the unit ideal")
    dim = krull_dim(G)
    hilb = hilbert_series(G, hilbert_degree)
    return RingPresentation(ring, kept, G, dim, hilb, name=name)


def polynomial_ring(names, p=32003, name=None):
    ring = PolyRing(names, p)
    return validate(ring, [], name=name)


def presentation(names, ideal, p=32003, name=None):
    """Convenience constructor from strings: presentation(['x','y'], ['x*y'])."""
    ring = PolyRing(names, p)
    return validate(ring, [ring.parse(s) for s in ideal], name=name)


def embedding_dim(A):
    """dim_k m/m^2; equals the variable count since every relation has degree >= 2."""
    n = A.nvars
    h1 = A.hilbert[1] if len(A.hilbert) > 1 else A.hilbert_prefix(1)[1]
    assert h1 == n, f"Hilbert coefficient h_1 = {h1} differs from {n} variables"
    return n


def is_nonzerodivisor(A, g):
    if isinstance(g, RingElement):
        g = g.rep
    if g.is_zero():
        return False
    if not A.gb.generators:
        return True
    return ideal_quotient(A.gb, g) == A.gb


def find_nonzerodivisor(A, attempts=None, seed=SEARCH_SEED):
    """First degree-one form g with (I : g) = I: variables in order, then seeded random combinations."""
    n = A.nvars
    if attempts is None:
        attempts = n + 16
    rng = random.Random(seed)
    tried = 0
    candidates = list(A.ring.gens())
    while tried < attempts and n:
        if tried < len(candidates):
            g = candidates[tried]
        else:
            coeffs = [rng.randrange(A.p) for _ in range(n)]
            if not any(coeffs):
                coeffs[0] = 1
            g = A.ring.from_dict({v.lm: c for v, c in zip(candidates, coeffs)})
        tried += 1
        if is_nonzerodivisor(A, g):
            return RingElement(A, g)
    raise SearchExhaustedError(
        f"no degree-1 nonzerodivisor of {A.name} found in {tried} attempts")


def reduction_map(A, g):
    """Ring A' = A/gA and the images of A's variables in A'.

    g = c*x_j + (other variables) with x_j the last variable carrying a
    nonzero coefficient; x_j is replaced by -(other)/c and dropped.
    """
    if isinstance(g, RingElement):
        g = g.rep
    if not isinstance(g, SparsePoly) or g.is_zero():
        raise ValueError("quotient by the zero element")
    if not g.is_homogeneous() or g.degree() != 1:
        raise ValueError(f"{g} is not a linear form (it has no degree-1 part or is inhomogeneous)")
    coeffs = g.as_dict()
    n = A.nvars
    lin = [coeffs.get(tuple(int(i == k) for i in range(n)), 0) for k in range(n)]
    j = max(k for k in range(n) if lin[k])
    names = [v for k, v in enumerate(A.vars) if k != j]
    target = PolyRing(names, A.p)
    inv = pow(lin[j], -1, A.p)
    images = []
    new_vars = target.gens()
    sub = target.zero()
    for k in range(n):
        if k != j and lin[k]:
            sub = sub + new_vars[k if k < j else k - 1].scale(-lin[k] * inv)
    for k in range(n):
        if k == j:
            images.append(sub)
        else:
            images.append(new_vars[k if k < j else k - 1])
    new_gens = [f.substitute(images, target).monic() for f in A.gens]
    name = f"{A.name}/({g})"
    return validate(target, new_gens, name=name), images


def quotient_by(A, g):
    """Presentation of A/gA for a linear form g, one variable eliminated."""
    return reduction_map(A, g)[0]
