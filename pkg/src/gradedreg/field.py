"""Prime fields F_p with 2 <= p < 2**31."""

from dataclasses import dataclass

DEFAULT_CHARACTERISTIC = 32003


def is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def check_characteristic(p):
    if not (2 <= p < 2**31) or not is_prime(p):
        raise ValueError(f"characteristic must be a prime below 2^31, got {p}")
    return p


def inv_mod(a, p):
    a %= p
    if a == 0:
        raise ZeroDivisionError(f"0 has no inverse modulo {p}")
    return pow(a, -1, p)


def symmetric(a, p):
    """Representative of a mod p in (-p/2, p/2]."""
    a %= p
    return a - p if a > p // 2 else a


@dataclass(frozen=True)
class FieldElem:
    value: int
    p: int

    def __post_init__(self):
        object.__setattr__(self, "value", self.value % self.p)

    def _coerce(self, other):
        if isinstance(other, FieldElem):
            if other.p != self.p:
                from .errors import ContextError
                raise ContextError(f"F_{self.p} and F_{other.p} do not mix")
            return other.value
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        v = self._coerce(other)
        return NotImplemented if v is NotImplemented else FieldElem(self.value + v, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        return NotImplemented if v is NotImplemented else FieldElem(self.value - v, self.p)

    def __rsub__(self, other):
        v = self._coerce(other)
        return NotImplemented if v is NotImplemented else FieldElem(v - self.value, self.p)

    def __mul__(self, other):
        v = self._coerce(other)
        return NotImplemented if v is NotImplemented else FieldElem(self.value * v, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return FieldElem(-self.value, self.p)

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElem(self.value * inv_mod(v, self.p), self.p)

    def inv(self):
        return FieldElem(inv_mod(self.value, self.p), self.p)

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"{self.value} (mod {self.p})"


def field_inv(a):
    """Multiplicative inverse of a nonzero FieldElem."""
    return a.inv()
