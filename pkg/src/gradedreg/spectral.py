"""Spectral sequences of finite filtered differential spaces.

A FilteredStrand carries a decreasing filtration F^0 = C >= F^1 >= ... >=
F^{smax+1} = 0 preserved by d (d lowers total degree by one).  Pages are
computed from the defining quotients

    Z^s_r = {x in F^s : dx in F^{s+r}},
    E^s_r = Z^s_r / (d Z^{s-r+1}_{r-1} + Z^{s+1}_{r-1}),

so d_r maps E^s_r (total degree n) to E^{s+r}_r (total degree n - 1).
"""

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from . import linalg
from .errors import InternalInconsistencyError, TruncationError
from .resolutions import ModulePresentation, minimal_resolution, resolve_residue_field
from .rings import RingElement, reduction_map


class FilteredStrand:
    """Total complex C_n (n = 0..top) with explicit filtration subspaces.

    dims[n]   dimension of C_n
    d[n]      matrix C_n -> C_{n-1}, shape (dims[n-1], dims[n])
    filt[n]   list of RREF bases, filt[n][s] = F^s in C_n for s = 0..smax
    """

    def __init__(self, dims, d, filt, p, levels=None):
        self.dims = dict(dims)
        self.d = dict(d)
        self.filt = dict(filt)
        self.p = p
        self.smax = max((len(f) - 1 for f in self.filt.values()), default=0)
        self.levels = levels
        self._z = {}

    @classmethod
    def from_levels(cls, dims, d, levels, p):
        """Coordinate filtration: basis vector k of C_n lies in F^s iff levels[n][k] >= s."""
        smax = max((max(lv) for lv in levels.values() if len(lv)), default=0)
        filt = {}
        for n, size in dims.items():
            lv = np.asarray(levels.get(n, []), dtype=np.int64)
            bases = []
            for s in range(smax + 1):
                idx = np.flatnonzero(lv >= s)
                b = linalg.zeros((len(idx), size))
                b[np.arange(len(idx)), idx] = 1
                bases.append(b)
            filt[n] = bases
        lvs = {n: np.asarray(levels.get(n, []), dtype=np.int64) for n in dims}
        return cls(dims, d, filt, p, lvs)

    def size(self, n):
        return self.dims.get(n, 0)

    def F(self, s, n):
        size = self.size(n)
        if s <= 0:
            return linalg.identity(size)
        if s > self.smax:
            return linalg.zeros((0, size))
        return self.filt[n][s]

    def dmat(self, n):
        if n in self.d:
            return self.d[n]
        return linalg.zeros((self.size(n - 1), self.size(n)))

    def Z(self, r, s, n):
        key = (r, s, n)
        if key not in self._z:
            if self.levels is None:
                z = linalg.preimage(self.dmat(n), self.F(s, n), self.F(s + r, n - 1), self.p)
            else:
                z = self._coordinate_z(r, s, n)
            self._z[key] = z
        return self._z[key]

    def _coordinate_z(self, r, s, n):
        # F^s is spanned by coordinate vectors, so Z is a kernel of a submatrix
        size = self.size(n)
        if size == 0:
            return linalg.zeros((0, 0))
        cols = np.flatnonzero(self.levels[n] >= s)
        if len(cols) == 0:
            return linalg.zeros((0, size))
        low = self.levels.get(n - 1)
        rows = np.flatnonzero(low < s + r) if low is not None else np.zeros(0, dtype=np.int64)
        sub = self.dmat(n)[np.ix_(rows, cols)] if len(rows) else linalg.zeros((0, len(cols)))
        ker = linalg.nullspace(sub, self.p)
        out = linalg.zeros((ker.shape[0], size))
        out[:, cols] = ker
        return linalg.span(out, self.p, size)

    def denominator(self, r, s, n):
        boundary = linalg.image(self.dmat(n + 1), self.Z(r - 1, s - r + 1, n + 1), self.p)
        if boundary.shape[1] != self.size(n):
            boundary = linalg.zeros((0, self.size(n)))
        return linalg.subspace_sum(boundary, self.Z(r - 1, s + 1, n), self.p)

    def page_dim(self, r, s, n):
        if self.size(n) == 0:
            return 0
        z = self.Z(r, s, n)
        den = self.denominator(r, s, n)
        both = linalg.subspace_sum(z, den, self.p)
        if linalg.dim(both) != linalg.dim(z):
            raise InternalInconsistencyError(f"page denominator escapes Z at r={r}, s={s}, n={n}")
        return linalg.dim(z) - linalg.dim(den)

    def differential_rank(self, r, s, n):
        """Rank of d_r : E^s_r (degree n) -> E^{s+r}_r (degree n-1)."""
        if self.size(n) == 0 or self.size(n - 1) == 0:
            return 0
        den = self.denominator(r, s + r, n - 1)
        img = linalg.image(self.dmat(n), self.Z(r, s, n), self.p)
        return linalg.dim(linalg.subspace_sum(img, den, self.p)) - linalg.dim(den)

    def homology_dim(self, n):
        size = self.size(n)
        if size == 0:
            return 0
        ker = size - linalg.rank(self.dmat(n), self.p)
        return ker - linalg.rank(self.dmat(n + 1), self.p)

    def defects(self):
        """Violated structural conditions: d^2 = 0, nesting, d-stability."""
        bad = []
        p = self.p
        for n in self.dims:
            if self.size(n - 1) and self.size(n - 2) and self.size(n):
                if (self.dmat(n - 1) @ self.dmat(n) % p).any():
                    bad.append(("d2", n))
            for s in range(self.smax + 1):
                if not linalg.contains(self.F(s, n), self.F(s + 1, n), p):
                    bad.append(("nested", n, s))
                if self.size(n - 1) and self.F(s, n).shape[0]:
                    img = linalg.image(self.dmat(n), self.F(s, n), p)
                    if not linalg.contains(self.F(s, n - 1), img, p):
                        bad.append(("stable", n, s))
        return bad


def page(F, r, p, q):
    """dim E^p_r in total degree p + q (filtration index p, complementary degree q)."""
    if p < 0 or p > F.smax or F.size(p + q) == 0:
        return PageEntry(r, p, q, 0)
    return PageEntry(r, p, q, F.page_dim(r, p, p + q))


@dataclass
class PageEntry:
    r: int
    p: int
    q: int
    dim: int
    representatives: object = None


# -- change of rings ----------------------------------------------------------

@dataclass
class DoubleComplexStrand:
    degree: int
    strand: FilteredStrand
    top: int


class ChangeOfRings:
    """C_{pq} = P_p (x)_A Q_q for P -> k over A and Q -> k over A' = A/gA.

    Indices: p counts the A-resolution P, q the A'-resolution Q.  The total
    differential is d_I + (-1)^p d_II with d_I from P (reduced mod g) and
    d_II from Q.  The filtration is by q (rows), so the associated graded
    carries d_I, E^1_{pq} = H_p(P (x) Q_q) = Tor^A_p(A', k) (x) Q_q and
    E^2_{pq} = Tor^{A'}_q(Tor^A_p(A', k), k).  The page-r differential goes
    from cell (p, q) to (p + r - 1, q - r).

    Everything is restricted to internal degrees <= D (D=None picks the
    smallest sufficient bound); entries are valid for total degree <= window + 1.
    """

    def __init__(self, A, g, window, D=12):
        if isinstance(g, RingElement):
            g = g.rep
        if window < 0:
            raise TruncationError("window must be nonnegative", min_window=0)
        self.A = A
        self.g = g
        self.window = window
        self.top = window + 2
        self.A2, self.images = reduction_map(A, g)
        self.P = resolve_residue_field(A, self.top)
        self.Q = resolve_residue_field(self.A2, self.top)
        self.F = minimal_resolution(ModulePresentation.cyclic(A, [g]), self.top)
        need = self.minimal_degree()
        if D is None:
            D = need
        self.D = D
        if D < need:
            raise TruncationError(
                f"internal degree bound D={D} is too small; need D >= {need}",
                min_window=window, min_degree=need)
        self._build()

    def minimal_degree(self):
        """Smallest D seeing every Tor^A_n(k,k) and E^2_{pq} entry with p + q <= window + 1."""
        w = self.window
        degs = [0]
        for n in range(min(w, self.P.length) + 1):
            degs.extend(self.P.degrees[n])
        # E^2_{pq} sits in degrees (Tor^A_p(A', k) degree) + (Q_q degree)
        for p in range(min(w + 1, self.F.length) + 1):
            for q in range(min(w + 1 - p, self.Q.length) + 1):
                if self.F.degrees[p] and self.Q.degrees[q]:
                    degs.append(max(self.F.degrees[p]) + max(self.Q.degrees[q]))
        return max(degs)

    def rank_P(self, p):
        return self.P.rank(p)

    def rank_Q(self, q):
        return self.Q.rank(q)

    def _cells(self, n):
        return [(p, n - p) for p in range(n + 1)
                if p <= self.P.length and n - p <= self.Q.length]

    def _build(self):
        A2 = self.A2
        zero = A2.ring.zero()
        P, Q = self.P, self.Q
        # d_I entries of P reduced into A'
        Pbar = [[tuple(A2.reduce(f.substitute(self.images, A2.ring)) for f in col)
                 for col in P.maps[i]] for i in range(len(P.maps))]
        self.gens = {}
        for n in range(self.top + 1):
            gens = []
            for p, q in self._cells(n):
                for a, da in enumerate(P.degrees[p]):
                    for b, db in enumerate(Q.degrees[q]):
                        gens.append((p, q, a, b, da + db))
            self.gens[n] = gens
        self.cols = {}
        for n in range(1, self.top + 1):
            index = {(p, q, a, b): k for k, (p, q, a, b, _) in enumerate(self.gens[n - 1])}
            cols = []
            for p, q, a, b, _ in self.gens[n]:
                col = [zero] * len(self.gens[n - 1])
                if p >= 1:
                    for a2, f in enumerate(Pbar[p - 1][a]):
                        if f.terms:
                            col[index[(p - 1, q, a2, b)]] = f
                if q >= 1:
                    sign = -1 if p % 2 else 1
                    for b2, f in enumerate(Q.maps[q - 1][b]):
                        if f.terms:
                            k = index[(p, q - 1, a, b2)]
                            col[k] = col[k] + (f if sign > 0 else -f)
                cols.append(tuple(col))
            self.cols[n] = cols
        self.strands = {j: self._strand(j) for j in range(self.D + 1)}

    def _strand(self, j):
        G = self.A2.graded
        dims, d, levels = {}, {}, {}
        for n in range(self.top + 1):
            degs = [g[4] for g in self.gens[n]]
            dims[n] = G.strand_dim(degs, j)
            lv = []
            for p, q, a, b, deg in self.gens[n]:
                lv.extend([self.top - q] * G.dim(j - deg))
            levels[n] = lv
            if n >= 1:
                d[n] = G.strand_map(self.cols[n], degs, [g[4] for g in self.gens[n - 1]], j)
        return FilteredStrand.from_levels(dims, d, levels, self.A.p)

    # cell (p, q) <-> filtration index s = top - q in total degree p + q
    def e_dim(self, r, p, q, j=None):
        if p < 0 or q < 0 or p + q > self.top:
            return 0
        js = range(self.D + 1) if j is None else [j]
        return sum(self.strands[k].page_dim(r, self.top - q, p + q) for k in js)

    def d_rank(self, r, p, q):
        """Rank of d_r out of cell (p, q), summed over internal degrees."""
        if q - r < 0 or p + r - 1 < 0:
            return 0
        return sum(s.differential_rank(r, self.top - q, p + q) for s in self.strands.values())

    def homology_dim(self, n):
        return sum(s.homology_dim(n) for s in self.strands.values())

    def defects(self):
        return {j: s.defects() for j, s in self.strands.items() if s.defects()}

    @cached_property
    def tor_coefficients(self):
        """dim_k Tor^A_p(A', k) for p <= top."""
        return [self.F.rank(p) for p in range(self.top + 1)]

    def e2_direct(self, p, q):
        b = self.Q.rank(q) if q <= self.Q.length else 0
        return self.tor_coefficients[p] * b


def cor_double_complex(A, g, window, D=12):
    """Filtered strands (one per internal degree <= D) of the change-of-rings double complex."""
    cor = _cor(A, g, window, D)
    return [DoubleComplexStrand(j, s, cor.top) for j, s in cor.strands.items()]


_COR_CACHE = {}


def _cor(A, g, window, D):
    rep = g.rep if isinstance(g, RingElement) else g
    key = (id(A), rep, window, D)
    hit = _COR_CACHE.get(key)
    if hit is None or hit.A is not A:
        hit = ChangeOfRings(A, rep, window, D)
        _COR_CACHE[key] = hit
    return hit


@dataclass
class E2Table:
    window: int
    entries: dict = field(default_factory=dict)
    direct: dict = field(default_factory=dict)

    def column(self, p):
        return [self.entries.get((p, q), 0) for q in range(self.window + 1)]


def cor_e2(A, g, window, D=12):
    """E^2 of the change-of-rings sequence, computed from pages and directly; must agree."""
    cor = _cor(A, g, window, D)
    table = E2Table(window)
    for n in range(window + 2):
        for p in range(n + 1):
            q = n - p
            table.entries[(p, q)] = cor.e_dim(2, p, q)
            table.direct[(p, q)] = cor.e2_direct(p, q)
    bad = {k: (v, table.direct[k]) for k, v in table.entries.items() if v != table.direct[k]}
    if bad:
        raise InternalInconsistencyError(f"E^2 from pages disagrees with Tor dimensions at {bad}")
    return table


@dataclass
class D2Row:
    q: int
    d2_rank: int
    vanishes: bool


def d2_vanishing_check(A, g, window, D=12):
    """Rank of d^2 from E^2_{0,q} to E^2_{1,q-2} for q = 0..window."""
    cor = _cor(A, g, window, D)
    rows = []
    for q in range(window + 1):
        r = cor.d_rank(2, 0, q)
        rows.append(D2Row(q, r, r == 0))
    return rows


@dataclass
class AbutmentRow:
    n: int
    lhs: int
    rhs: int
    equal: bool


def abutment_check(A, g, window, D=12):
    """dim Tor^A_n(k,k) against sum_{p+q=n} dim E^inf_{pq}, with E^inf read at r = 3."""
    cor = _cor(A, g, window, D)
    lhs = cor.P.betti().totals(window)
    rows = []
    for n in range(window + 1):
        total = 0
        for p in range(n + 1):
            e3 = cor.e_dim(3, p, n - p)
            e4 = cor.e_dim(4, p, n - p)
            if e3 != e4:
                raise InternalInconsistencyError(
                    f"pages do not stabilise at r=3 in cell ({p}, {n - p}): {e3} != {e4}")
            total += e3
        rows.append(AbutmentRow(n, lhs[n], total, lhs[n] == total))
    return rows
