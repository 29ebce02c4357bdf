"""Reference computations that avoid Groebner bases entirely.

A = R/I is handled one degree at a time: A_d = R_d / I_d with I_d spanned by
m*g for the generators g.  Everything else (Hilbert function, Betti numbers
of k, Koszul homology) is plain linear algebra on these pieces, written with
Python integers and fractions-free elimination mod p.
"""

from itertools import combinations


def monomials(n, d):
    if n == 0:
        return [()] if d == 0 else []
    if n == 1:
        return [(d,)]
    out = []
    for a in range(d, -1, -1):
        out.extend((a,) + rest for rest in monomials(n - 1, d - a))
    return out


def rref_rows(rows, p):
    """Row-reduce a list of dict vectors; returns {pivot: normalized row}."""
    piv = {}
    for v in rows:
        v = {k: c % p for k, c in v.items() if c % p}
        v = reduce_vec(v, piv, p)
        if v:
            lead = min(v)
            inv = pow(v[lead], -1, p)
            v = {k: c * inv % p for k, c in v.items()}
            for k2 in list(piv):
                row = piv[k2]
                if lead in row:
                    c = row[lead]
                    piv[k2] = _axpy(row, v, -c, p)
            piv[lead] = v
    return piv


def _axpy(a, b, c, p):
    out = dict(a)
    for k, x in b.items():
        y = (out.get(k, 0) + c * x) % p
        if y:
            out[k] = y
        else:
            out.pop(k, None)
    return out


def reduce_vec(v, piv, p):
    v = dict(v)
    for k in sorted(v):
        if k in v and k in piv:
            v = _axpy(v, piv[k], -v[k], p)
    return v


class LinearQuotient:
    """R/I over F_p, degree by degree.  Polynomials are dicts {exponent tuple: coeff}."""

    def __init__(self, n, gens, p):
        self.n = n
        self.p = p
        self.gens = [g for g in gens if g]
        self._ideal = {}
        self._mons = {}

    def mons(self, d):
        if d not in self._mons:
            ms = monomials(self.n, d) if d >= 0 else []
            self._mons[d] = (ms, {m: i for i, m in enumerate(ms)})
        return self._mons[d]

    def ideal(self, d):
        """Pivot rows of I_d in the monomial coordinates of R_d."""
        if d not in self._ideal:
            ms, idx = self.mons(d)
            rows = []
            for g in self.gens:
                gd = sum(next(iter(g)))
                for m in self.mons(d - gd)[0]:
                    rows.append({idx[tuple(a + b for a, b in zip(m, t))]: c for t, c in g.items()})
            self._ideal[d] = rref_rows(rows, self.p)
        return self._ideal[d]

    def hilbert(self, d):
        return len(self.mons(d)[0]) - len(self.ideal(d))

    def reduce(self, v, d):
        return reduce_vec(v, self.ideal(d), self.p)

    def standard(self, d):
        piv = self.ideal(d)
        return [i for i in range(len(self.mons(d)[0])) if i not in piv]

    def times_mono(self, v, d, m):
        """Coordinates (in R_{d+|m|}) of m * v, reduced."""
        ms, _ = self.mons(d)
        e = sum(m)
        _, idx = self.mons(d + e)
        out = {}
        for i, c in v.items():
            k = idx[tuple(a + b for a, b in zip(ms[i], m))]
            out[k] = (out.get(k, 0) + c) % self.p
        return self.reduce({k: c for k, c in out.items() if c}, d + e)


def _unit(n, v):
    return tuple(int(i == v) for i in range(n))


def _kernel(columns, ncols, p):
    """Basis of the kernel of the matrix with the given dict columns (as dicts over column index)."""
    # eliminate on augmented vectors: (column image, identity tag)
    piv = {}
    kernel = []
    for j in range(ncols):
        v = {("r", k): c for k, c in columns[j].items()}
        v[("t", j)] = 1
        changed = True
        while changed:
            changed = False
            for k in sorted(x for x in v if x[0] == "r"):
                if k in piv:
                    v = _axpy(v, piv[k], -v[k], p)
                    changed = True
                    break
        rows = [k for k in v if k[0] == "r"]
        if rows:
            lead = min(rows)
            inv = pow(v[lead], -1, p)
            piv[lead] = {k: c * inv % p for k, c in v.items()}
        else:
            kernel.append({k[1]: c for k, c in v.items()})
    return kernel


class _Free:
    """Graded free A-module: element in degree j = tuple of block dicts, block k in R_{j - deg_k}."""

    def __init__(self, Q, degs):
        self.Q = Q
        self.degs = degs

    def basis(self, j):
        out = []
        for k, a in enumerate(self.degs):
            for i in self.Q.standard(j - a) if j >= a else []:
                out.append((k, i))
        return out



def betti_oracle(n, gens, p, steps, max_degree):
    """{(i, j): beta_ij} of the residue field for j <= max_degree, i <= steps."""
    Q = LinearQuotient(n, gens, p)
    betti = {(0, 0): 1}
    # F_1 -> F_0 = A: the variables
    images = [[(Q.reduce({Q.mons(1)[1][_unit(n, v)]: 1}, 1),) for v in range(n)]]
    src_degs = [1] * n
    tgt_degs = [0]
    if n:
        betti[(1, 1)] = n
    for i in range(1, steps):
        F = _Free(Q, src_degs)
        gimg = images[-1]
        new_imgs, new_degs = [], []
        prev_kernel = []
        for j in range(max_degree + 1):
            basis = F.basis(j)
            cols = []
            for k, si in basis:
                a = src_degs[k]
                m = Q.mons(j - a)[0][si]
                col = {}
                for t, blk in enumerate(gimg[k]):
                    prod = Q.times_mono(blk, a - tgt_degs[t], m)
                    for r, c in prod.items():
                        col[(t, r)] = (col.get((t, r), 0) + c) % p
                cols.append({key: c for key, c in col.items() if c})
            ker = _kernel(cols, len(basis), p)
            kel = []
            for vec in ker:
                elem = [dict() for _ in src_degs]
                for idx, c in vec.items():
                    k, si = basis[idx]
                    elem[k][si] = c
                kel.append(elem)
            # m * K_{j-1}
            pos = {b: t for t, b in enumerate(basis)}
            sub = []
            for elem in prev_kernel:
                for v in range(n):
                    x = _unit(n, v)
                    flat = {}
                    for k, a in enumerate(src_degs):
                        if elem[k]:
                            prod = Q.times_mono(elem[k], j - 1 - a, x)
                            for si, c in prod.items():
                                flat[pos[(k, si)]] = c
                    sub.append(flat)
            piv = rref_rows(sub, p)
            for elem in kel:
                flat = {pos[(k, si)]: c for k, blk in enumerate(elem) for si, c in blk.items()}
                r = reduce_vec(flat, piv, p)
                if r:
                    lead = min(r)
                    inv = pow(r[lead], -1, p)
                    r = {kk: c * inv % p for kk, c in r.items()}
                    for k2 in list(piv):
                        if lead in piv[k2]:
                            piv[k2] = _axpy(piv[k2], r, -piv[k2][lead], p)
                    piv[lead] = r
                    new_imgs.append(tuple(elem))
                    new_degs.append(j)
                    betti[(i + 1, j)] = betti.get((i + 1, j), 0) + 1
            prev_kernel = kel
        if not new_degs:
            break
        images.append(new_imgs)
        tgt_degs, src_degs = src_degs, new_degs
    return betti


def betti_totals(table, steps):
    return [sum(r for (i, _), r in table.items() if i == k) for k in range(steps + 1)]


def koszul_homology_oracle(n, gens, p, max_degree):
    """dim H_i(x_1..x_n; A) summed over internal degrees <= max_degree."""
    Q = LinearQuotient(n, gens, p)
    subsets = [list(combinations(range(n), i)) for i in range(n + 1)]

    def strand(i, j):
        # basis of K_i in degree j: (S, standard monomial of degree j - i)
        return [(S, s) for S in subsets[i] for s in (Q.standard(j - i) if j >= i else [])]

    def matrix(i, j):
        src, tgt = strand(i, j), strand(i - 1, j)
        pos = {b: t for t, b in enumerate(tgt)}
        cols = []
        for S, s in src:
            m = Q.mons(j - i)[0][s]
            col = {}
            for k, v in enumerate(S):
                face = S[:k] + S[k + 1:]
                prod = Q.times_mono({s: 1}, j - i, _unit(n, v))
                sign = 1 if k % 2 == 0 else -1
                for r, c in prod.items():
                    key = pos[(face, r)]
                    col[key] = (col.get(key, 0) + sign * c) % p
            cols.append({k2: c for k2, c in col.items() if c})
        return cols, len(src)

    def rank(i, j):
        if i < 1 or i > n:
            return 0
        cols, _ = matrix(i, j)
        return len(rref_rows(cols, p))

    out = []
    for i in range(n + 1):
        total = 0
        for j in range(max_degree + 1):
            total += len(strand(i, j)) - rank(i, j) - rank(i + 1, j)
        out.append(total)
    return out


def in_ideal_bounded(n, gens, f, p, bound):
    """True if f = sum a_i g_i with deg(a_i g_i) <= bound (a certificate of membership)."""
    mons = [m for d in range(bound + 1) for m in monomials(n, d)]
    idx = {m: i for i, m in enumerate(mons)}
    rows = []
    for g in gens:
        gd = max(sum(t) for t in g)
        for d in range(bound - gd + 1):
            for m in monomials(n, d):
                rows.append({idx[tuple(a + b for a, b in zip(m, t))]: c for t, c in g.items()})
    piv = rref_rows(rows, p)
    target = {idx[t]: c for t, c in f.items()}
    return not reduce_vec(target, piv, p)


def kernel_dims_bounded(n, cols, p, row_degrees, col_degrees, max_degree, gens=()):
    """dim_k of the kernel of A^m -> A^r in each internal degree <= max_degree."""
    Q = LinearQuotient(n, gens, p)
    out = []
    for j in range(max_degree + 1):
        src = [(b, s) for b, d in enumerate(col_degrees) for s in (Q.standard(j - d) if j >= d else [])]
        columns = []
        for b, s in src:
            m = Q.mons(j - col_degrees[b])[0][s]
            col = {}
            for a, f in enumerate(cols[b]):
                if not f:
                    continue
                fd = j - col_degrees[b] + max(sum(t) for t in f)
                vec = {}
                _, idx = Q.mons(fd)
                for t, c in f.items():
                    k = idx[tuple(x + y for x, y in zip(t, m))]
                    vec[k] = (vec.get(k, 0) + c) % p
                for r, c in Q.reduce({k: c for k, c in vec.items() if c}, fd).items():
                    col[(a, r)] = c
            columns.append(col)
        out.append(len(src) - len(rref_rows(columns, p)))
    return out
