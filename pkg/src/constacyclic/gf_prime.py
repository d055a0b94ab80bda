"""Prime field arithmetic.

Elements are canonical residues in ``[0, p)``. Internally the library works on
plain ``int`` residues (and numpy arrays of them) for speed; :class:`FpElem`
wraps a residue together with its modulus for callers who want operator
syntax and modulus checking.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import ContextMismatch, NotInvertible, ParameterError

P_CAP = 1 << 16

FpVector = tuple  # tuple[int, ...] of canonical residues


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, s, t)`` with ``s*a + t*b == g == gcd(a, b)``."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    return a, s0, t0


@lru_cache(maxsize=None)
def inv_mod(x: int, p: int) -> int:
    x %= p
    if x == 0:
        raise NotInvertible(f"0 has no inverse mod {p}")
    g, s, _ = xgcd(x, p)
    if g != 1:
        raise NotInvertible(f"{x} is not invertible mod {p}")
    return s % p


@dataclass(frozen=True)
class FpElem:
    value: int
    p: int

    def __post_init__(self):
        object.__setattr__(self, "value", self.value % self.p)

    def _coerce(self, other) -> int:
        if isinstance(other, FpElem):
            if other.p != self.p:
                raise ContextMismatch(f"moduli differ: {self.p} vs {other.p}")
            return other.value
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        return o if o is NotImplemented else FpElem(self.value + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return o if o is NotImplemented else FpElem(self.value - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        return o if o is NotImplemented else FpElem(o - self.value, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        return o if o is NotImplemented else FpElem(self.value * o, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return FpElem(-self.value, self.p)

    def inverse(self) -> FpElem:
        return FpElem(inv_mod(self.value, self.p), self.p)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FpElem(self.value * inv_mod(o, self.p), self.p)

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return FpElem(pow(self.value, e, self.p), self.p)

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"{self.value} (mod {self.p})"


class GF:
    """The prime field F_p. Calling it builds elements: ``GF(5)(7) == 2``."""

    def __init__(self, p: int, allow_two: bool = False):
        check_prime(p, allow_two=allow_two)
        self.p = p

    def __call__(self, value) -> FpElem:
        if isinstance(value, FpElem):
            if value.p != self.p:
                raise ContextMismatch(f"moduli differ: {self.p} vs {value.p}")
            return value
        return FpElem(int(value), self.p)

    def __eq__(self, other):
        return isinstance(other, GF) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"

    def elements(self):
        return [FpElem(v, self.p) for v in range(self.p)]


def _same(x: FpElem, y: FpElem) -> int:
    if x.p != y.p:
        raise ContextMismatch(f"moduli differ: {x.p} vs {y.p}")
    return x.p


def fp_add(x: FpElem, y: FpElem) -> FpElem:
    return FpElem(x.value + y.value, _same(x, y))


def fp_sub(x: FpElem, y: FpElem) -> FpElem:
    return FpElem(x.value - y.value, _same(x, y))


def fp_mul(x: FpElem, y: FpElem) -> FpElem:
    return FpElem(x.value * y.value, _same(x, y))


def fp_neg(x: FpElem) -> FpElem:
    return FpElem(-x.value, x.p)


def fp_inv(x: FpElem) -> FpElem:
    return FpElem(inv_mod(x.value, x.p), x.p)


def check_prime(p: int, allow_two: bool = False) -> None:
    if not isinstance(p, int) or isinstance(p, bool):
        raise ParameterError(f"p must be an integer, got {p!r}")
    if p == 2 and not allow_two:
        raise ParameterError("p = 2: 2 not invertible (need an odd prime)")
    if p < 2 or not is_prime(p):
        raise ParameterError(f"p not prime: {p}")
    if p % 2 == 0 and not allow_two:
        raise ParameterError(f"p must be odd: {p}")
    if p > P_CAP:
        raise ParameterError(f"p = {p} exceeds the supported cap {P_CAP}")


@dataclass(frozen=True)
class Params:
    """Validated (p, k, m). Build it through :func:`validate_params`."""

    p: int
    k: int
    m: int

    @property
    def ring(self):
        from .ring_r import RingContext

        return RingContext(self.p, self.k)


def validate_params(p: int, k: int, m: int) -> Params:
    if isinstance(p, int) and p % 2 == 0 and p != 2 and p > 0:
        raise ParameterError(f"p must be odd: {p} is even")
    check_prime(p)
    if not isinstance(k, int) or k < 1:
        raise ParameterError(f"k must be >= 1, got {k!r}")
    if not isinstance(m, int) or m < 1:
        raise ParameterError(f"m must be >= 1, got {m!r}")
    return Params(p, k, m)
