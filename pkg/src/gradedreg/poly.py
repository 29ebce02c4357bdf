"""Sparse multivariate polynomials over F_p in degree reverse lexicographic order.

Monomials are plain exponent tuples.  A ``SparsePoly`` is immutable and
canonical: its terms are sorted strictly descending and carry no zero
coefficients, so two polynomials are equal iff their term tuples are equal.
"""

from dataclasses import dataclass
import re

from .errors import ContextError, ParseError
from .field import DEFAULT_CHARACTERISTIC, check_characteristic, inv_mod, symmetric

MAX_DEGREE = 2**15


# -- monomials ---------------------------------------------------------------

def mono_degree(m):
    return sum(m)


def mono_mul(a, b):
    m = tuple(x + y for x, y in zip(a, b))
    if sum(m) >= MAX_DEGREE:
        raise OverflowError(f"monomial degree exceeds {MAX_DEGREE - 1}")
    return m


def mono_divides(a, b):
    """True iff a divides b."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(a, b):
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


def mono_gcd(a, b):
    return tuple(x if x < y else y for x, y in zip(a, b))


def degrevlex_key(m):
    """Sort key: a larger key is a larger monomial in degrevlex."""
    return (sum(m), tuple(-e for e in reversed(m)))


def monomials_of_degree(n, d):
    """All exponent tuples of length n and total degree d, degrevlex-descending."""
    if n == 0:
        return [()] if d == 0 else []
    out = []

    def rec(prefix, left, slots):
        if slots == 1:
            out.append(prefix + (left,))
            return
        for e in range(left, -1, -1):
            rec(prefix + (e,), left - e, slots - 1)

    rec((), d, n)
    out.sort(key=degrevlex_key, reverse=True)
    return out


@dataclass(frozen=True)
class TermOrder:
    """Degrevlex on monomials, extended to free modules.

    A module term (i, u) is compared by block of component i first (smaller
    block dominates, giving elimination between blocks), then by shifted
    degree deg(u) + shift[i], then by position (lower index larger), then by
    degrevlex on u.  With a single component this is plain degrevlex.
    """

    shifts: tuple = ()
    blocks: tuple = ()

    def key(self, comp, mono):
        shift = self.shifts[comp] if comp < len(self.shifts) else 0
        block = self.blocks[comp] if comp < len(self.blocks) else 0
        return (-block, sum(mono) + shift, -comp, tuple(-e for e in reversed(mono)))


DEGREVLEX = TermOrder()


# -- rings and polynomials ---------------------------------------------------

class PolyRing:
    """The polynomial ring F_p[names]."""

    def __init__(self, names=(), p=DEFAULT_CHARACTERISTIC):
        self.p = check_characteristic(p)
        self.names = tuple(names)
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"duplicate variable names in {self.names}")
        for name in self.names:
            if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", name):
                raise ValueError(f"invalid variable name {name!r}")
        self.nvars = len(self.names)

    def __eq__(self, other):
        return isinstance(other, PolyRing) and self.p == other.p and self.names == other.names

    def __hash__(self):
        return hash((self.p, self.names))

    def __repr__(self):
        return f"PolyRing({list(self.names)}, p={self.p})"

    @property
    def one_mono(self):
        return (0,) * self.nvars

    def zero(self):
        return SparsePoly(self, ())

    def one(self):
        return self.const(1)

    def const(self, c):
        return self.from_dict({self.one_mono: c})

    def var(self, i):
        if isinstance(i, str):
            i = self.names.index(i)
        m = [0] * self.nvars
        m[i] = 1
        return SparsePoly(self, ((tuple(m), 1),))

    def gens(self):
        return [self.var(i) for i in range(self.nvars)]

    def monomial(self, mono, c=1):
        return self.from_dict({tuple(mono): c})

    def from_dict(self, d):
        p = self.p
        items = [(m, c % p) for m, c in d.items()]
        items = [(m, c) for m, c in items if c]
        for m, _ in items:
            if len(m) != self.nvars:
                raise ContextError(f"exponent vector {m} does not fit {self!r}")
        items.sort(key=lambda t: degrevlex_key(t[0]), reverse=True)
        return SparsePoly(self, tuple(items))

    def from_terms(self, terms):
        """Accumulate (mono, coef) pairs, merging duplicates."""
        d = {}
        for m, c in terms:
            d[m] = d.get(m, 0) + c
        return self.from_dict(d)

    def parse(self, text):
        return parse_poly(text, self)


class SparsePoly:
    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms
        self._hash = None

    # -- inspection
    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def as_dict(self):
        return dict(self.terms)

    @property
    def lm(self):
        return self.terms[0][0]

    @property
    def lc(self):
        return self.terms[0][1]

    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m, _ in self.terms), default=-1)

    def is_homogeneous(self):
        return len({sum(m) for m, _ in self.terms}) <= 1

    def is_constant(self):
        return all(sum(m) == 0 for m, _ in self.terms)

    def constant_coeff(self):
        if self.terms and sum(self.terms[-1][0]) == 0:
            return self.terms[-1][1]
        return 0

    def homogeneous_part(self, d):
        return SparsePoly(self.ring, tuple(t for t in self.terms if sum(t[0]) == d))

    def monic(self):
        if not self.terms:
            return self
        return self.scale(inv_mod(self.lc, self.ring.p))

    # -- arithmetic
    def _check(self, other):
        if isinstance(other, int):
            return self.ring.const(other)
        if not isinstance(other, SparsePoly):
            return NotImplemented
        if other.ring != self.ring:
            raise ContextError(f"{self.ring!r} and {other.ring!r} differ")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        d = dict(self.terms)
        p = self.ring.p
        for m, c in other.terms:
            v = (d.get(m, 0) + c) % p
            if v:
                d[m] = v
            else:
                d.pop(m, None)
        return self.ring.from_dict(d)

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.p
        return SparsePoly(self.ring, tuple((m, p - c) for m, c in self.terms))

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def scale(self, c):
        c %= self.ring.p
        if c == 0:
            return self.ring.zero()
        p = self.ring.p
        return SparsePoly(self.ring, tuple((m, v * c % p) for m, v in self.terms))

    def mul_term(self, mono, c=1):
        c %= self.ring.p
        if c == 0:
            return self.ring.zero()
        p = self.ring.p
        # multiplication by a monomial preserves the order
        return SparsePoly(self.ring, tuple((mono_mul(m, mono), v * c % p) for m, v in self.terms))

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        other = self._check(other)
        if other is NotImplemented:
            return other
        p = self.ring.p
        d = {}
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                m = mono_mul(m1, m2)
                d[m] = (d.get(m, 0) + c1 * c2) % p
        return self.ring.from_dict(d)

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative exponent")
        result = self.ring.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.const(other)
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, self.terms))
        return self._hash

    def substitute(self, images, target):
        """Image under the ring map sending variable i to images[i] (polys in target)."""
        result = {}
        p = target.p
        cache = {}

        def power(i, e):
            if (i, e) not in cache:
                cache[(i, e)] = images[i] ** e
            return cache[(i, e)]

        for m, c in self.terms:
            term = target.const(c)
            for i, e in enumerate(m):
                if e:
                    term = term * power(i, e)
            for tm, tc in term.terms:
                result[tm] = (result.get(tm, 0) + tc) % p
        return target.from_dict(result)

    def __repr__(self):
        return f"SparsePoly({self})"

    def __str__(self):
        return format_poly(self)


# -- printing and parsing ----------------------------------------------------

def format_mono(m, names):
    parts = []
    for name, e in zip(names, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_poly(f):
    if not f.terms:
        return "0"
    p = f.ring.p
    out = []
    for m, c in f.terms:
        c = symmetric(c, p)
        body = format_mono(m, f.ring.names)
        mag = abs(c)
        if not body:
            text = str(mag)
        elif mag == 1:
            text = body
        else:
            text = f"{mag}*{body}"
        if not out:
            out.append(("-" if c < 0 else "") + text)
        else:
            out.append((" - " if c < 0 else " + ") + text)
    return "".join(out)


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")


def _tokenize(text):
    pos = 0
    tokens = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            break
        num, ident, sym = m.groups()
        col = m.start(m.lastindex) + 1
        if num is not None:
            tokens.append(("num", int(num), col))
        elif ident is not None:
            tokens.append(("id", ident, col))
        else:
            if sym not in "+-*^()":
                raise ParseError(f"unexpected character {sym!r}", column=col)
            tokens.append((sym, sym, col))
        pos = m.end()
    tokens.append(("end", None, len(text) + 1))
    return tokens


def parse_poly(text, ring, line=None):
    """Parse `x*y - 3*z^2` style text.  Integer literals reduce mod p."""
    try:
        tokens = _tokenize(text)
    except ParseError as exc:
        raise ParseError(str(exc).split(": ", 1)[-1], line=line, column=exc.column) from None
    pos = 0

    def fail(msg, tok):
        raise ParseError(msg, line=line, column=tok[2])

    def peek():
        return tokens[pos]

    def take():
        nonlocal pos
        tok = tokens[pos]
        pos += 1
        return tok

    def expr():
        sign = 1
        if peek()[0] in ("+", "-"):
            sign = -1 if take()[0] == "-" else 1
        acc = term()
        if sign < 0:
            acc = -acc
        while peek()[0] in ("+", "-"):
            op = take()[0]
            t = term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term():
        acc = factor()
        while peek()[0] == "*":
            take()
            acc = acc * factor()
        return acc

    def factor():
        base = atom()
        if peek()[0] == "^":
            take()
            tok = take()
            if tok[0] != "num":
                fail("exponent must be a nonnegative integer", tok)
            base = base ** tok[1]
        return base

    def atom():
        tok = take()
        kind, val, _ = tok
        if kind == "num":
            return ring.const(val)
        if kind == "id":
            if val not in ring.names:
                fail(f"unknown variable {val!r}", tok)
            return ring.var(val)
        if kind == "(":
            inner = expr()
            if take()[0] != ")":
                fail("expected ')'", tokens[pos - 1])
            return inner
        if kind == "-":
            return -atom()
        fail(f"unexpected {'end of input' if kind == 'end' else repr(val)}", tok)

    result = expr()
    if peek()[0] != "end":
        fail(f"unexpected {peek()[1]!r}", peek())
    return result
