"""Koszul complexes, their homology on graded strands, depth, Auslander-Buchsbaum."""

from dataclasses import dataclass
from itertools import combinations

from . import linalg
from .errors import PreconditionError
from .resolutions import FreeComplex, ModulePresentation, pd_finite, projective_dimension
from .rings import RingElement

DEFAULT_TRUNCATION = 12
RECHECK_EXTRA = 4


@dataclass
class KoszulComplex:
    base: object
    elements: list
    complex: FreeComplex

    @property
    def length(self):
        return len(self.elements)


def koszul(A, elems):
    """K(f_1..f_r; A) with d(e_S) = sum_j (-1)^j f_{s_j} e_{S - s_j} (0-based j)."""
    polys = [A.reduce(f.rep if isinstance(f, RingElement) else f) for f in elems]
    r = len(polys)
    fdeg = [f.degree() if f.terms else 1 for f in polys]
    bases = [list(combinations(range(r), i)) for i in range(r + 1)]
    degrees = [[sum(fdeg[s] for s in S) for S in basis] for basis in bases]
    zero = A.ring.zero()
    maps = []
    for i in range(1, r + 1):
        index = {S: k for k, S in enumerate(bases[i - 1])}
        cols = []
        for S in bases[i]:
            col = [zero] * len(bases[i - 1])
            for j, s in enumerate(S):
                face = S[:j] + S[j + 1:]
                f = polys[s]
                col[index[face]] = f if j % 2 == 0 else -f
            cols.append(tuple(col))
        maps.append(cols)
    return KoszulComplex(A, [A.element(f) for f in polys], FreeComplex(A, degrees, maps))


def _tensor_with(K, M):
    """The complex K (x) M as polynomial matrices plus the submodules K_i (x) im(relations)."""
    A = K.base
    C = K.complex
    rdeg = list(M.row_degrees)
    r = len(rdeg)
    zero = A.ring.zero()
    degrees = [[d + e for d in degs for e in rdeg] for degs in C.degrees]
    maps = []
    for i in range(1, C.length + 1):
        src, tgt = C.rank(i), C.rank(i - 1)
        cols = []
        for b in range(src):
            for a in range(r):
                col = [zero] * (tgt * r)
                for t in range(tgt):
                    col[t * r + a] = C.maps[i - 1][b][t]
                cols.append(tuple(col))
        maps.append(cols)
    rel_cols = M.columns()
    subs = []
    for i in range(C.length + 1):
        cols, cdeg = [], []
        for s, d in enumerate(C.degrees[i]):
            for rel in rel_cols:
                if not any(f.terms for f in rel):
                    continue
                col = [zero] * (C.rank(i) * r)
                for a in range(r):
                    col[s * r + a] = rel[a]
                cols.append(tuple(col))
                cdeg.append(d + _rel_degree(rel, rdeg))
        subs.append((cols, cdeg))
    return degrees, maps, subs


def _rel_degree(rel, rdeg):
    for d, f in zip(rdeg, rel):
        if f.terms:
            return d + f.degree()
    return 0


class _QuotientComplexStrands:
    """Homology of (free complex)/(subcomplex of images), one internal degree at a time."""

    def __init__(self, A, degrees, maps, subs):
        self.A = A
        self.degrees = degrees
        self.maps = maps
        self.subs = subs
        self._memo = {}

    def homology_dim(self, i, j):
        """dim Z/B with Z = d^-1(S_{i-1}), B = S_i + im d_{i+1}, all by sparse ranks."""
        key = (i, j)
        if key in self._memo:
            return self._memo[key]
        Q = self.A.graded
        p = self.A.p
        n_i = Q.strand_dim(self.degrees[i], j)
        if n_i == 0:
            self._memo[key] = 0
            return 0
        cycles = n_i
        if i >= 1:
            d = Q.strand_columns(self.maps[i - 1], self.degrees[i], self.degrees[i - 1], j)
            sub_prev = self._sub_columns(i - 1, j)
            # {x : d x in S} has dim n_i - (rank [d | S] - rank S)
            cycles -= linalg.sparse_rank(d + sub_prev, p) - linalg.sparse_rank(sub_prev, p)
        bounds = self._sub_columns(i, j)
        if i + 1 < len(self.degrees):
            bounds = bounds + Q.strand_columns(self.maps[i], self.degrees[i + 1], self.degrees[i], j)
        h = cycles - linalg.sparse_rank(bounds, p)
        assert h >= 0
        self._memo[key] = h
        return h

    def _sub_columns(self, i, j):
        cols, cdeg = self.subs[i]
        if not cols:
            return []
        return self.A.graded.strand_columns(cols, cdeg, self.degrees[i], j)


def homology_table(K, D, M=None):
    """{i: [dim H_i in degree j for j = 0..D]} for K (x) M (M defaults to A)."""
    M = M or ModulePresentation.free(K.base)
    strands = _QuotientComplexStrands(K.base, *_tensor_with(K, M))
    return {i: [strands.homology_dim(i, j) for j in range(D + 1)] for i in range(K.length + 1)}, strands


def koszul_homology_dims(K, D=DEFAULT_TRUNCATION, M=None):
    """Total dim_k H_i(K (x) M) summed over internal degrees <= D, for i = 0..r."""
    table, _ = homology_table(K, D, M)
    return [sum(table[i]) for i in range(K.length + 1)]


def koszul_homology_checked(K, D=DEFAULT_TRUNCATION, M=None):
    """Like koszul_homology_dims, but any H_i judged zero at D is re-examined up to D+4."""
    M = M or ModulePresentation.free(K.base)
    strands = _QuotientComplexStrands(K.base, *_tensor_with(K, M))
    dims = []
    for i in range(K.length + 1):
        total = sum(strands.homology_dim(i, j) for j in range(D + 1))
        if total == 0:
            total = sum(strands.homology_dim(i, j) for j in range(D + 1, D + RECHECK_EXTRA + 1))
        dims.append(total)
    return dims


def depth(A, M=None, D=DEFAULT_TRUNCATION):
    """n - max{i : H_i(x_1..x_n; M) != 0}."""
    K = koszul(A, A.ring.gens())
    dims = koszul_homology_checked(K, D, M)
    nonzero = [i for i, h in enumerate(dims) if h]
    if not nonzero:
        raise ValueError("depth of the zero module is infinite")
    return A.nvars - max(nonzero)


@dataclass
class ABReport:
    pd: int
    depth: int
    gldh: int
    holds: bool


def ab_check(A, M, D=DEFAULT_TRUNCATION):
    """Compare pd M + depth M with the global dimension of a regular ring A."""
    verdict = pd_finite(A)
    if not verdict.finite:
        raise PreconditionError(f"{A.name} has no finite global dimension within {verdict.bound} steps")
    gldh = verdict.length
    pd = projective_dimension(M, gldh + 1)
    if not pd.finite:
        raise PreconditionError("module resolution exceeded the global dimension")
    dep = depth(A, M, D)
    return ABReport(pd.length, dep, gldh, pd.length + dep == gldh)
