"""Graded pieces of A = R/I as finite-dimensional F_p vector spaces.

For a homogeneous ideal with Groebner basis G, A_d has the standard
monomials of degree d as basis.  A homogeneous matrix between graded free
A-modules restricts to an explicit F_p-linear map in each internal degree;
those restrictions ("strands") feed every rank computation downstream.
"""

import numpy as np

from .groebner import minimal_monomials, reduce_poly
from .poly import mono_divides, mono_mul, monomials_of_degree


class GradedQuotient:
    def __init__(self, ring, gb):
        self.ring = ring
        self.gb = gb
        self.p = ring.p
        self._lead = minimal_monomials(gb.leading_monomials())
        self._basis = {}
        self._nf = {}

    def basis(self, d):
        """Standard monomials of degree d and their index map."""
        if d < 0:
            return [], {}
        if d not in self._basis:
            mons = [m for m in monomials_of_degree(self.ring.nvars, d)
                    if not any(mono_divides(a, m) for a in self._lead)]
            self._basis[d] = (mons, {m: i for i, m in enumerate(mons)})
        return self._basis[d]

    def dim(self, d):
        return len(self.basis(d)[0])

    def nf_monomial(self, m):
        """Normal form of a monomial as a sparse coordinate dict in basis(deg m)."""
        hit = self._nf.get(m)
        if hit is not None:
            return hit
        mons, index = self.basis(sum(m))
        if m in index:
            vec = {index[m]: 1}
        else:
            f = reduce_poly(self.ring.monomial(m), self.gb)
            vec = {index[t]: c for t, c in f.terms}
        self._nf[m] = vec
        return vec

    def vector(self, f, d):
        """Coordinates of a homogeneous element of degree d (reduced on the fly)."""
        out = np.zeros(self.dim(d), dtype=np.int64)
        for m, c in f.terms:
            for i, a in self.nf_monomial(m).items():
                out[i] = (out[i] + c * a) % self.p
        return out

    def element(self, vec, d):
        mons, _ = self.basis(d)
        return self.ring.from_dict({mons[i]: int(c) for i, c in enumerate(vec) if c})

    def strand_columns(self, cols, src_degs, tgt_degs, j):
        """Sparse columns {row: coeff} of the map given by cols in internal degree j.

        cols[b][a] is the entry taking source generator b (degree src_degs[b])
        to target generator a (degree tgt_degs[a]).  Source strand basis is
        ordered by generator, then by standard monomial of degree j - src_degs[b].
        """
        tgt_off, _ = self.offsets(tgt_degs, j)
        p = self.p
        out = []
        for b, col in enumerate(cols):
            smons, _ = self.basis(j - src_degs[b])
            entries = [(tgt_off[a], f) for a, f in enumerate(col)
                       if f.terms and j - tgt_degs[a] >= 0]
            for sm in smons:
                v = {}
                for row0, f in entries:
                    for m, c in f.terms:
                        for i, a in self.nf_monomial(mono_mul(m, sm)).items():
                            v[row0 + i] = (v.get(row0 + i, 0) + c * a) % p
                out.append({r: c for r, c in v.items() if c})
        return out

    def strand_map(self, cols, src_degs, tgt_degs, j):
        """Dense matrix form of strand_columns."""
        tgt_dim = self.strand_dim(tgt_degs, j)
        columns = self.strand_columns(cols, src_degs, tgt_degs, j)
        mat = np.zeros((tgt_dim, len(columns)), dtype=np.int64)
        for c, v in enumerate(columns):
            for r, a in v.items():
                mat[r, c] = a
        return mat

    def offsets(self, degs, j):
        off = []
        total = 0
        for d in degs:
            off.append(total)
            total += self.dim(j - d)
        return off, total

    def strand_dim(self, degs, j):
        return sum(self.dim(j - d) for d in degs)

