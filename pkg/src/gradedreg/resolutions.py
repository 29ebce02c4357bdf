"""Graded free complexes, minimal free resolutions and Betti tables.

A differential d_i : L_i -> L_{i-1} is stored as a list of columns, one per
generator of L_i, each column a tuple of polynomials (normal forms modulo
I) indexed by the generators of L_{i-1}.
"""

from dataclasses import dataclass, field

from . import linalg
from .groebner import ModuleElem, syzygies
from .rings import RingElement


@dataclass
class ModulePresentation:
    """coker(A^relations -> A^rows) with graded generators."""

    ring: object
    row_degrees: list
    relations: list

    @classmethod
    def residue_field(cls, A):
        return cls(A, [0], [(x,) for x in A.ring.gens()])

    @classmethod
    def cyclic(cls, A, polys):
        """A/J for J generated by the given homogeneous polynomials."""
        polys = [f.rep if isinstance(f, RingElement) else f for f in polys]
        return cls(A, [0], [(f,) for f in polys])

    @classmethod
    def free(cls, A, rank=1):
        return cls(A, [0] * rank, [])

    def columns(self):
        return [tuple(self.ring.reduce(f) for f in col) for col in self.relations]


@dataclass
class BettiTable:
    entries: dict = field(default_factory=dict)
    length: int = 0
    truncated: bool = False

    def total(self, i):
        return sum(r for (k, _), r in self.entries.items() if k == i)

    def totals(self, upto=None):
        upto = self.length if upto is None else upto
        return [self.total(i) for i in range(upto + 1)]

    def rows(self):
        """Sorted [i, j, rank] triples."""
        return [[i, j, r] for (i, j), r in sorted(self.entries.items()) if r]

    def __getitem__(self, key):
        return self.entries.get(key, 0)

    def __str__(self):
        if not self.entries:
            return "(zero)"
        idx = range(self.length + 1)
        lo = min(j - i for i, j in self.entries)
        hi = max(j - i for i, j in self.entries)
        width = max(3, max(len(str(r)) for r in self.entries.values()) + 1)
        lines = ["      " + "".join(f"{i:>{width}}" for i in idx),
                 "total:" + "".join(f"{self.total(i):>{width}}" for i in idx)]
        for s in range(lo, hi + 1):
            cells = []
            for i in idx:
                r = self.entries.get((i, i + s), 0)
                cells.append(f"{r if r else '.':>{width}}")
            lines.append(f"{s:>5}:" + "".join(cells))
        if self.truncated:
            lines.append("(truncated)")
        return "\n".join(lines)


class FreeComplex:
    """L_0 <- L_1 <- ... over a ring presentation; maps[i-1] is d_i."""

    def __init__(self, ring, degrees, maps, truncated=False):
        self.ring = ring
        self.degrees = [list(d) for d in degrees]
        self.maps = [list(m) for m in maps]
        self.truncated = truncated

    @property
    def length(self):
        return len(self.degrees) - 1

    def rank(self, i):
        return len(self.degrees[i]) if 0 <= i < len(self.degrees) else 0

    def ranks(self):
        return [len(d) for d in self.degrees]

    def d(self, i):
        return self.maps[i - 1]

    def betti(self):
        entries = {}
        for i, degs in enumerate(self.degrees):
            for j in degs:
                entries[(i, j)] = entries.get((i, j), 0) + 1
        return BettiTable(entries, self.length, self.truncated)

    def composition_defects(self):
        """Positions (i, column) where d_i o d_{i+1} does not reduce to zero."""
        A = self.ring
        bad = []
        for i in range(1, len(self.maps)):
            di, dn = self.maps[i - 1], self.maps[i]
            rows = self.rank(i - 1)
            for c, col in enumerate(dn):
                acc = [A.ring.zero() for _ in range(rows)]
                for b, coef in enumerate(col):
                    if coef.is_zero():
                        continue
                    for a in range(rows):
                        acc[a] = acc[a] + coef * di[b][a]
                if any(not A.reduce(f).is_zero() for f in acc):
                    bad.append((i, c))
        return bad

    def unit_entries(self):
        """(i, row, col) of every entry of some d_i with a nonzero degree-0 part."""
        out = []
        for i, m in enumerate(self.maps, start=1):
            for b, col in enumerate(m):
                for a, f in enumerate(col):
                    if f.constant_coeff():
                        out.append((i, a, b))
        return out

    def graded_defects(self):
        out = []
        for i, m in enumerate(self.maps, start=1):
            for b, col in enumerate(m):
                for a, f in enumerate(col):
                    if f.terms and (not f.is_homogeneous()
                                    or f.degree() != self.degrees[i][b] - self.degrees[i - 1][a]):
                        out.append((i, a, b))
        return out

    def strand(self, i, j):
        """Matrix of d_i restricted to internal degree j."""
        return self.ring.graded.strand_map(self.maps[i - 1], self.degrees[i], self.degrees[i - 1], j)

    def _columns(self, i, j):
        return self.ring.graded.strand_columns(self.maps[i - 1], self.degrees[i], self.degrees[i - 1], j)

    def homology_dims(self, i, D):
        """dim_k H_i in internal degrees 0..D (the top module is treated as having no boundaries
        beyond what was computed)."""
        p = self.ring.p
        out = []
        for j in range(D + 1):
            n_i = self.ring.graded.strand_dim(self.degrees[i], j) if i <= self.length else 0
            if n_i == 0:
                out.append(0)
                continue
            ker = n_i - (linalg.sparse_rank(self._columns(i, j), p) if i >= 1 else 0)
            im = linalg.sparse_rank(self._columns(i + 1, j), p) if i + 1 <= self.length else 0
            out.append(ker - im)
        return out

    def exactness_defects(self, D):
        """(i, j) with dim ker(d_i)_j != dim im(d_{i+1})_j, for 1 <= i and j <= D."""
        top = self.length if not self.truncated else self.length - 1
        bad = []
        for i in range(1, top + 1):
            h = self.homology_dims(i, D)
            bad.extend((i, j) for j, v in enumerate(h) if v)
        return bad


def _column_degree(col, row_degs):
    for d, f in zip(row_degs, col):
        if f.terms:
            return d + f.degree()
    raise ValueError("zero column has no degree")


def _eliminate_units(A, cur, cur_degs, rows_degs, prev):
    """Split off trivial summands A --1--> A from d_i (cur) in place.

    A unit entry u at (a, b) makes generator a of L_{i-1} superfluous:
    column b is a syzygy of d_{i-1} whose a-th coefficient is invertible.
    Clearing row a by column operations with column b, then deleting row a,
    column b, and column a of d_{i-1} (prev) keeps the complex exact.
    """
    p = A.p
    while True:
        hit = None
        for b, col in enumerate(cur):
            for a, f in enumerate(col):
                if f.constant_coeff():
                    hit = (a, b)
                    break
            if hit:
                break
        if hit is None:
            return cur, cur_degs, rows_degs, prev
        a, b = hit
        z = cur[b]
        uinv = pow(z[a].constant_coeff(), -1, p)
        new_cols, new_degs = [], []
        for c, col in enumerate(cur):
            if c == b:
                continue
            if col[a].terms:
                factor = col[a].scale(uinv)
                col = tuple(A.reduce(col[k] - factor * z[k]) if z[k].terms else col[k]
                            for k in range(len(col)))
            col = col[:a] + col[a + 1:]
            if any(f.terms for f in col):
                new_cols.append(col)
                new_degs.append(cur_degs[c])
        cur, cur_degs = new_cols, new_degs
        rows_degs = rows_degs[:a] + rows_degs[a + 1:]
        if prev is not None:
            prev = prev[:a] + prev[a + 1:]


def minimal_resolution(M, max_steps):
    """Minimal graded free resolution of M up to homological degree max_steps.

    Each step computes generators of the syzygy module with Groebner bases
    and then removes superfluous generators by unit-pivot elimination, so
    every differential maps into m times the previous module.
    """
    A = M.ring
    quotient = A.gb if A.gb.generators else None
    degrees = [list(M.row_degrees)]
    maps = []
    cur = [col for col in M.columns() if any(f.terms for f in col)]
    cur_degs = [_column_degree(col, degrees[0]) for col in cur]
    i = 1
    truncated = False
    while True:
        prev = maps[-1] if maps else None
        cur, cur_degs, rows, prev = _eliminate_units(A, cur, cur_degs, degrees[-1], prev)
        degrees[-1] = rows
        if maps:
            maps[-1] = prev
        if i - 1 == max_steps:
            truncated = bool(cur)
            break
        if not cur:
            break
        maps.append(cur)
        degrees.append(cur_degs)
        syz = syzygies([ModuleElem(col) for col in cur], rank=len(rows), quotient=quotient,
                       row_degrees=rows, col_degrees=cur_degs)
        cur = [tuple(s.components) for s in syz]
        cur_degs = [_column_degree(col, cur_degs) for col in cur]
        i += 1
    return FreeComplex(A, degrees, maps, truncated)


def default_steps(A):
    return 2 * A.nvars + 4


def resolve_residue_field(A, max_steps=None):
    if max_steps is None:
        max_steps = default_steps(A)
    cache = A.__dict__.setdefault("_res_cache", {})
    if max_steps not in cache:
        cache[max_steps] = minimal_resolution(ModulePresentation.residue_field(A), max_steps)
    return cache[max_steps]


def betti(A, max_steps=None):
    """Betti table of the residue field: entry (i, j) = dim_k Tor_i^A(k, k)_j."""
    return resolve_residue_field(A, max_steps).betti()


@dataclass
class PdVerdict:
    finite: bool
    length: object
    bound: int

    def __str__(self):
        return f"finite({self.length})" if self.finite else f"not-finite-up-to({self.bound})"


def projective_dimension(M, bound):
    C = minimal_resolution(M, bound)
    if C.truncated:
        return PdVerdict(False, None, bound)
    return PdVerdict(True, C.length, bound)


def pd_finite(A, bound=None):
    """Does the minimal resolution of k stop within `bound` steps?"""
    if bound is None:
        bound = default_steps(A)
    C = resolve_residue_field(A, bound)
    if C.truncated:
        return PdVerdict(False, None, bound)
    return PdVerdict(True, C.length, bound)


def tor_ring_change(A, g, max_p):
    """dim_k Tor_p^A(A/gA, k) for p = 0..max_p, from a minimal resolution of A/gA."""
    M = ModulePresentation.cyclic(A, [g])
    C = minimal_resolution(M, max_p)
    return [C.rank(p) for p in range(max_p + 1)]
