"""Buchberger's algorithm for ideals and submodules of free modules.

Internally a module element is a dict ``{(component, monomial): coeff}``;
an ideal is the rank-one case.  Everything public speaks ``SparsePoly`` or
``ModuleElem``.
"""

from dataclasses import dataclass
from functools import lru_cache
from heapq import heappop, heappush
from itertools import combinations
from math import comb

from .errors import ContextError, UnsupportedInputError, ZeroRingError
from .field import inv_mod
from .poly import (DEGREVLEX, TermOrder, mono_div, mono_divides, mono_gcd,
                   mono_lcm, mono_mul)


class ModuleElem:
    """A column vector over a polynomial ring."""

    __slots__ = ("components",)

    def __init__(self, components):
        self.components = tuple(components)

    @property
    def ring(self):
        return self.components[0].ring

    def __len__(self):
        return len(self.components)

    def __getitem__(self, i):
        return self.components[i]

    def __iter__(self):
        return iter(self.components)

    def is_zero(self):
        return all(c.is_zero() for c in self.components)

    def __eq__(self, other):
        return isinstance(other, ModuleElem) and self.components == other.components

    def __hash__(self):
        return hash(self.components)

    def __add__(self, other):
        return ModuleElem(a + b for a, b in zip(self.components, other.components))

    def __sub__(self, other):
        return ModuleElem(a - b for a, b in zip(self.components, other.components))

    def scale(self, f):
        return ModuleElem(f * c for c in self.components)

    def __repr__(self):
        return "ModuleElem(" + ", ".join(str(c) for c in self.components) + ")"


@dataclass
class GroebnerBasis:
    """A reduced Groebner basis; ``rank`` is None for ideals."""

    ring: object
    generators: list
    order: TermOrder = DEGREVLEX
    rank: object = None
    reduced: bool = True

    @property
    def is_ideal(self):
        return self.rank is None

    def leading_monomials(self):
        return [g.lm for g in self.generators]

    def is_unit(self):
        return self.is_ideal and any(g.is_constant() and g for g in self.generators)

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __eq__(self, other):
        return (isinstance(other, GroebnerBasis) and self.ring == other.ring
                and self.rank == other.rank and self.order == other.order
                and sorted(map(_elem_terms, self.generators)) == sorted(map(_elem_terms, other.generators)))


def _elem_terms(e):
    if isinstance(e, ModuleElem):
        return tuple(c.terms for c in e.components)
    return e.terms


# -- conversions --------------------------------------------------------------

def _vec_from_poly(f, comp=0):
    return {(comp, m): c for m, c in f.terms}


def _vec_from_elem(e, offset=0):
    v = {}
    for i, f in enumerate(e.components):
        for m, c in f.terms:
            v[(i + offset, m)] = c
    return v


def _poly_from_vec(ring, v):
    return ring.from_dict({m: c for (_, m), c in v.items()})


def _elem_from_vec(ring, v, rank, offset=0):
    parts = [dict() for _ in range(rank)]
    for (i, m), c in v.items():
        parts[i - offset][m] = c
    return ModuleElem(ring.from_dict(d) for d in parts)


# -- core engine --------------------------------------------------------------

class _Engine:
    """Buchberger state for one computation: basis, leading terms, order cache."""

    def __init__(self, p, order, ideal):
        self.p = p
        self.order = order
        self.ideal = ideal
        self.key = lru_cache(maxsize=None)(lambda t: order.key(t[0], t[1]))
        self.polys = []
        self.lts = []
        self.by_comp = {}

    def lead(self, v):
        return max(v, key=self.key)

    def make_monic(self, v, lt=None):
        lt = lt or self.lead(v)
        c = v[lt]
        if c == 1:
            return v
        inv = inv_mod(c, self.p)
        p = self.p
        return {t: a * inv % p for t, a in v.items()}

    def add(self, v):
        lt = self.lead(v)
        v = self.make_monic(v, lt)
        idx = len(self.polys)
        self.polys.append(v)
        self.lts.append(lt)
        self.by_comp.setdefault(lt[0], []).append(idx)
        return idx

    def find_reducer(self, term, exclude=None):
        comp, m = term
        for j in self.by_comp.get(comp, ()):
            if j != exclude and self.polys[j] is not None and mono_divides(self.lts[j][1], m):
                return j
        return None

    def reduce(self, v, exclude=None, full=True):
        """Normal form of v; head reduction only when full is False."""
        p = self.p
        key = self.key
        f = dict(v)
        rem = {}
        while f:
            t = max(f, key=key)
            c = f.pop(t)
            j = self.find_reducer(t, exclude)
            if j is None:
                rem[t] = c
                if not full:
                    rem.update(f)
                    return rem
                continue
            g = self.polys[j]
            glt = self.lts[j]
            q = mono_div(t[1], glt[1])
            for (gc, gm), a in g.items():
                if gc == glt[0] and gm == glt[1]:
                    continue
                s = (gc, mono_mul(gm, q))
                val = (f.get(s, 0) - c * a) % p
                if val:
                    f[s] = val
                else:
                    f.pop(s, None)
        return rem

    def spoly(self, i, j):
        (ci, mi), (cj, mj) = self.lts[i], self.lts[j]
        l = mono_lcm(mi, mj)
        qi, qj = mono_div(l, mi), mono_div(l, mj)
        p = self.p
        s = {}
        for (c, m), a in self.polys[i].items():
            t = (c, mono_mul(m, qi))
            s[t] = (s.get(t, 0) + a) % p
        for (c, m), a in self.polys[j].items():
            t = (c, mono_mul(m, qj))
            val = (s.get(t, 0) - a) % p
            if val:
                s[t] = val
            else:
                s.pop(t, None)
        return {t: a for t, a in s.items() if a}


def _buchberger(vectors, p, order, ideal, inert=()):
    """Reduced Groebner basis (list of monic dicts) of the given generators.

    ``inert`` holds indices of input vectors forming a Groebner basis of
    their own span with pairwise S-polynomials known to reduce to zero; such
    pairs are skipped.
    """
    eng = _Engine(p, order, ideal)
    inert_idx = set()
    for k, v in enumerate(vectors):
        if v:
            idx = eng.add(v)
            if k in inert:
                inert_idx.add(idx)

    pending = set()
    heap = []

    def lcm_weight(i, j):
        comp, mi = eng.lts[i]
        l = mono_lcm(mi, eng.lts[j][1])
        return eng.key((comp, l))[1]

    def push_pairs(new):
        comp = eng.lts[new][0]
        for i in eng.by_comp.get(comp, ()):
            if i == new or eng.polys[i] is None:
                continue
            if i in inert_idx and new in inert_idx:
                continue
            if ideal and all(x == 0 for x in mono_gcd(eng.lts[i][1], eng.lts[new][1])):
                continue  # product criterion, ideals only
            pair = (min(i, new), max(i, new))
            pending.add(pair)
            heappush(heap, (lcm_weight(*pair), pair))

    for idx in range(len(eng.polys)):
        comp = eng.lts[idx][0]
        for i in eng.by_comp.get(comp, ()):
            if i >= idx:
                break
            if i in inert_idx and idx in inert_idx:
                continue
            if ideal and all(x == 0 for x in mono_gcd(eng.lts[i][1], eng.lts[idx][1])):
                continue
            pending.add((i, idx))
            heappush(heap, (lcm_weight(i, idx), (i, idx)))

    while heap:
        _, (i, j) = heappop(heap)
        if (i, j) not in pending:
            continue
        pending.discard((i, j))
        if _chain_skip(eng, i, j, pending):
            continue
        s = eng.spoly(i, j)
        if not s:
            continue
        r = eng.reduce(s)
        if r:
            new = eng.add(r)
            push_pairs(new)

    return _reduce_basis(eng)


def _chain_skip(eng, i, j, pending):
    comp, mi = eng.lts[i]
    l = mono_lcm(mi, eng.lts[j][1])
    for k in eng.by_comp.get(comp, ()):
        if k == i or k == j or eng.polys[k] is None:
            continue
        if not mono_divides(eng.lts[k][1], l):
            continue
        if (min(i, k), max(i, k)) in pending or (min(j, k), max(j, k)) in pending:
            continue
        return True
    return False


def _reduce_basis(eng):
    """Drop elements with divisible leading terms, then interreduce."""
    keep = []
    idxs = sorted(range(len(eng.polys)), key=lambda k: eng.key(eng.lts[k]))
    for k in idxs:
        comp, m = eng.lts[k]
        if any(eng.lts[j][0] == comp and mono_divides(eng.lts[j][1], m) for j in keep):
            continue
        keep.append(k)
    keep_set = set(keep)
    for k in range(len(eng.polys)):
        if k not in keep_set:
            eng.polys[k] = None
    out = []
    for k in keep:
        v = eng.reduce(eng.polys[k], exclude=k)
        # the leading term survives untouched since no other lt divides it
        out.append(eng.make_monic(v))
    for k, v in zip(keep, out):
        eng.polys[k] = v
    return [eng.polys[k] for k in keep], eng


# -- public API ---------------------------------------------------------------

def _ring_of(gens):
    ring = None
    for g in gens:
        r = g.ring if not isinstance(g, ModuleElem) or g.components else None
        if r is None:
            continue
        if ring is None:
            ring = r
        elif r != ring:
            raise ContextError("generators live in different rings")
    return ring


def gb(gens, order=DEGREVLEX, ring=None, rank=None):
    """Reduced Groebner basis of an ideal (SparsePoly gens) or submodule (ModuleElem gens)."""
    gens = list(gens)
    ring = ring or _ring_of(gens)
    if ring is None:
        raise ValueError("cannot infer the ring of an empty generator list")
    module = rank is not None or any(isinstance(g, ModuleElem) for g in gens)
    if module:
        if rank is None:
            rank = len(gens[0])
        vecs = []
        for g in gens:
            if len(g) != rank:
                raise ContextError("module generators of different ranks")
            vecs.append(_vec_from_elem(g))
        basis, _ = _buchberger(vecs, ring.p, order, ideal=False)
        elems = [_elem_from_vec(ring, v, rank) for v in basis]
        return GroebnerBasis(ring, elems, order, rank)
    vecs = [_vec_from_poly(g) for g in gens]
    basis, _ = _buchberger(vecs, ring.p, order, ideal=True)
    return GroebnerBasis(ring, [_poly_from_vec(ring, v) for v in basis], order)


def _engine_for(G):
    eng = _Engine(G.ring.p, G.order, G.is_ideal)
    for g in G.generators:
        eng.add(_vec_from_poly(g) if G.is_ideal else _vec_from_elem(g))
    return eng


def normal_form(f, G):
    """Remainder of f on division by the Groebner basis G."""
    if G.is_ideal:
        if isinstance(f, ModuleElem):
            raise ContextError("module element reduced by an ideal basis")
        if f.ring != G.ring:
            raise ContextError("polynomial and basis live in different rings")
        eng = _cached_engine(G)
        return _poly_from_vec(G.ring, eng.reduce(_vec_from_poly(f)))
    if not isinstance(f, ModuleElem) or len(f) != G.rank:
        raise ContextError("element rank does not match the basis")
    eng = _cached_engine(G)
    return _elem_from_vec(G.ring, eng.reduce(_vec_from_elem(f)), G.rank)


def _cached_engine(G):
    eng = getattr(G, "_engine", None)
    if eng is None:
        eng = _engine_for(G)
        G._engine = eng
    return eng


def reduce_poly(f, G):
    """Normal form of a polynomial modulo an ideal basis (fast path, no checks)."""
    eng = _cached_engine(G)
    return G.ring.from_dict({m: c for (_, m), c in eng.reduce(_vec_from_poly(f)).items()})


def contains(G, f):
    nf = normal_form(f, G)
    return nf.is_zero()


def spoly_closure_ok(G):
    """Buchberger criterion: every S-polynomial of G reduces to zero."""
    eng = _engine_for(G)
    n = len(eng.polys)
    for i, j in combinations(range(n), 2):
        if eng.lts[i][0] != eng.lts[j][0]:
            continue
        if eng.reduce(eng.spoly(i, j)):
            return False
    return True


def syzygies(cols, rank=None, quotient=None, row_degrees=None, col_degrees=None):
    """Generators of the kernel of the map R^m -> R^rank (or A^m -> A^rank) given by cols.

    cols are ModuleElem (or SparsePoly when rank is 1).  With ``quotient`` a
    Groebner basis of an ideal I, the kernel is taken over A = R/I by
    adjoining the columns g*e_j for g in the basis of I; returned entries are
    reduced modulo I and zero syzygies are dropped.

    The kernel is read off a Groebner basis of the graph module spanned by
    (col_i, e_i) under an order eliminating the target components.
    """
    cols = [c if isinstance(c, ModuleElem) else ModuleElem([c]) for c in cols]
    m = len(cols)
    if m == 0:
        return []
    rank = rank if rank is not None else len(cols[0])
    ring = _ring_of(cols) if quotient is None else quotient.ring
    if ring is None:
        # every column is zero-rank; every vector is a syzygy
        raise ValueError("syzygies of rank-0 columns: kernel is free of rank m")
    row_degrees = list(row_degrees) if row_degrees is not None else [0] * rank
    if col_degrees is None:
        col_degrees = [_column_degree(c, row_degrees) for c in cols]
    shifts = tuple(row_degrees) + tuple(col_degrees)
    blocks = (0,) * rank + (1,) * m
    order = TermOrder(shifts, blocks)

    vecs = []
    for i, c in enumerate(cols):
        v = _vec_from_elem(c)
        v[(rank + i, ring.one_mono)] = 1
        vecs.append(v)
    inert = set()
    if quotient is not None:
        for j in range(rank):
            for g in quotient.generators:
                inert.add(len(vecs))
                vecs.append(_vec_from_poly(g, j))
    basis, eng = _buchberger(vecs, ring.p, order, ideal=False, inert=inert)
    out = []
    seen = set()
    for v in basis:
        lt = max(v, key=eng.key)
        if lt[0] < rank:
            continue
        elem = _elem_from_vec(ring, {t: a for t, a in v.items() if t[0] >= rank}, m, offset=rank)
        if quotient is not None:
            elem = ModuleElem(reduce_poly(f, quotient) for f in elem.components)
        if elem.is_zero():
            continue
        sig = _elem_terms(elem)
        if sig in seen:
            continue
        seen.add(sig)
        out.append(elem)
    return out


def _column_degree(col, row_degrees):
    for d, f in zip(row_degrees, col.components):
        if f.terms:
            return d + f.degree()
    return 0


def ideal_quotient(G, g):
    """Groebner basis of (I : g) = {f : f*g in I}."""
    if g.is_zero():
        raise ValueError("ideal quotient by the zero polynomial")
    ring = G.ring
    cols = [g] + list(G.generators)
    syz = syzygies(cols, rank=1)
    firsts = [s.components[0] for s in syz]
    firsts = [f for f in firsts if f]
    if not firsts:
        return GroebnerBasis(ring, [], G.order)
    return gb(firsts, ring=ring)


# -- monomial-ideal invariants --------------------------------------------------

def minimal_monomials(monos):
    monos = sorted(set(monos), key=sum)
    out = []
    for m in monos:
        if not any(mono_divides(a, m) for a in out):
            out.append(m)
    return out


def _check_homogeneous(G):
    if not G.is_ideal:
        raise UnsupportedInputError("Hilbert series of modules not supported")
    for g in G.generators:
        if not g.is_homogeneous():
            raise UnsupportedInputError(f"inhomogeneous generator {g}")


def hilbert_series(G, D):
    """h_0..h_D with h_d = dim_k (R/I)_d, from the leading-term ideal."""
    _check_homogeneous(G)
    n = G.ring.nvars
    gens = minimal_monomials(G.leading_monomials())
    return list(_hilbert_monomial(frozenset(gens), n, D))


@lru_cache(maxsize=4096)
def _hilbert_monomial(gens, n, D):
    if any(sum(m) == 0 for m in gens):
        return (0,) * (D + 1)
    if not gens:
        return tuple(comb(d + n - 1, n - 1) if n else int(d == 0) for d in range(D + 1))
    ordered = sorted(gens)
    last = ordered[-1]
    rest = frozenset(ordered[:-1])
    colon = frozenset(minimal_monomials(mono_div(a, mono_gcd(a, last)) for a in rest))
    base = _hilbert_monomial(rest, n, D)
    sub = _hilbert_monomial(colon, n, D)
    s = sum(last)
    return tuple(base[d] - (sub[d - s] if d >= s else 0) for d in range(D + 1))


def krull_dim(G):
    """Largest set of variables containing the support of no leading monomial."""
    if G.is_unit():
        raise ZeroRingError("the unit ideal presents the zero ring")
    _check_homogeneous(G)
    n = G.ring.nvars
    supports = [frozenset(i for i, e in enumerate(m) if e) for m in minimal_monomials(G.leading_monomials())]
    for size in range(n, -1, -1):
        for subset in combinations(range(n), size):
            s = set(subset)
            if not any(sup <= s for sup in supports):
                return size
    return 0
