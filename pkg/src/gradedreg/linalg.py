"""Exact linear algebra over F_p on int64 numpy arrays.

Subspaces of F_p^n are stored as row bases in reduced row echelon form
(shape ``(k, n)``).  Linear maps act on column vectors, so a map
F_p^n -> F_p^m is an ``(m, n)`` array.  p < 2**31 keeps every product
below 2**62.
"""

import numpy as np


def as_matrix(rows, ncols, p):
    a = np.zeros((len(rows), ncols), dtype=np.int64)
    for i, row in enumerate(rows):
        a[i, :] = row
    return a % p


def zeros(shape):
    return np.zeros(shape, dtype=np.int64)


def rref(m, p):
    """Return (R, pivots) with R the nonzero rows of the reduced row echelon form."""
    a = np.array(m, dtype=np.int64) % p
    if a.ndim != 2:
        raise ValueError("rref expects a 2-d array")
    nrows, ncols = a.shape
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            a[[r, k]] = a[[k, r]]
        inv = pow(int(a[r, c]), -1, p)
        a[r] = a[r] * inv % p
        col = a[:, c].copy()
        col[r] = 0
        rows = np.flatnonzero(col)
        if rows.size:
            a[rows] = (a[rows] - np.outer(col[rows], a[r])) % p
        pivots.append(c)
        r += 1
    return a[:r], pivots


def rank(m, p):
    m = np.asarray(m)
    if m.size == 0:
        return 0
    return len(rref(m, p)[1])


def nullspace(m, p):
    """Row basis of {x : m @ x == 0}."""
    m = np.asarray(m, dtype=np.int64)
    n = m.shape[1]
    if m.shape[0] == 0:
        return np.eye(n, dtype=np.int64)
    r, pivots = rref(m, p)
    free = [c for c in range(n) if c not in set(pivots)]
    basis = zeros((len(free), n))
    for i, f in enumerate(free):
        basis[i, f] = 1
        for row, pc in enumerate(pivots):
            basis[i, pc] = (-r[row, f]) % p
    return basis


def span(rows, p, n=None):
    rows = np.asarray(rows, dtype=np.int64)
    if rows.size == 0:
        if n is None:
            n = rows.shape[1] if rows.ndim == 2 else 0
        return zeros((0, n))
    return rref(rows, p)[0]


def identity(n):
    return np.eye(n, dtype=np.int64)


def column_space(m, p):
    return span(np.asarray(m).T, p, m.shape[0])


def dim(u):
    return u.shape[0]


def residual(vectors, basis, p):
    """Reduce row vectors modulo the span of an RREF basis."""
    v = np.array(vectors, dtype=np.int64) % p
    if basis.shape[0] == 0 or v.shape[0] == 0:
        return v
    _, pivots = _pivots_of(basis)
    coeffs = v[:, pivots]
    return (v - coeffs @ basis % p) % p


def _pivots_of(basis):
    piv = [int(np.flatnonzero(row)[0]) for row in basis]
    return basis, piv


def subspace_sum(u, w, p):
    if u.shape[0] == 0:
        return w
    if w.shape[0] == 0:
        return u
    return span(np.vstack([u, w]), p)


def contains(u, w, p):
    """True iff span(w) is contained in span(u)."""
    if w.shape[0] == 0:
        return True
    return not residual(w, u, p).any()


def intersect(u, w, p):
    n = u.shape[1]
    if u.shape[0] == 0 or w.shape[0] == 0:
        return zeros((0, n))
    # a @ u == b @ w  <=>  (a, -b) lies in the left kernel of [u; w]
    stacked = np.vstack([u, w])
    coeffs = nullspace(stacked.T, p)
    if coeffs.shape[0] == 0:
        return zeros((0, n))
    return span(coeffs[:, : u.shape[0]] @ u % p, p, n)


def image(d, u, p):
    """Span of d applied to the rows of u."""
    m = d.shape[0]
    if u.shape[0] == 0 or m == 0:
        return zeros((0, m))
    return span(u @ d.T % p, p, m)


def preimage(d, u, w, p):
    """{x in span(u) : d x in span(w)}, as an RREF basis."""
    n = u.shape[1]
    if u.shape[0] == 0:
        return zeros((0, n))
    if d.shape[0] == 0:
        return u
    images = u @ d.T % p
    res = residual(images, w, p)
    coeffs = nullspace(res.T, p)
    if coeffs.shape[0] == 0:
        return zeros((0, n))
    return span(coeffs @ u % p, p, n)


def kernel_dim(d, p):
    return d.shape[1] - rank(d, p)


def sparse_rank(columns, p):
    """Rank of a matrix given as sparse columns {row: coeff}, by incremental elimination."""
    pivots = {}
    for col in columns:
        v = {r: c % p for r, c in col.items() if c % p}
        while v:
            r = max(v)
            piv = pivots.get(r)
            if piv is None:
                inv = pow(v[r], -1, p)
                pivots[r] = {k: c * inv % p for k, c in v.items()}
                break
            c = v[r]
            for k, a in piv.items():
                val = (v.get(k, 0) - c * a) % p
                if val:
                    v[k] = val
                else:
                    del v[k]
    return len(pivots)
