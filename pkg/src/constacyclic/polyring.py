"""Univariate polynomials in the variable ``a`` over F_p and over R.

Coefficients are ascending: ``PolyFp([4, 0, 1], 5)`` is 4 + a^2 over F_5.
The zero polynomial has no coefficients and degree ``NEG_INF``.
"""

from __future__ import annotations

import itertools
import random
import re
from dataclasses import dataclass

from .errors import ContextMismatch, PolySyntaxError, PreconditionError
from .gf_prime import check_prime, inv_mod
from .ring_r import RingContext, RingElem, lambda_unit

NEG_INF = float("-inf")


def _strip(c: list) -> tuple:
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class PolyFp:
    __slots__ = ("coeffs", "p")

    def __init__(self, coeffs, p: int):
        self.p = p
        self.coeffs = _strip([int(c) % p for c in coeffs])

    @classmethod
    def monomial(cls, e: int, p: int, c: int = 1) -> PolyFp:
        return cls([0] * e + [c], p)

    @classmethod
    def x_pow_pm1(cls, m: int, sign: int, p: int) -> PolyFp:
        """a^m - 1 (sign=+1) or a^m + 1 (sign=-1)."""
        return cls([-sign] + [0] * (m - 1) + [1], p)

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (1,)

    def is_monic(self) -> bool:
        return self.lead == 1

    def monic(self) -> PolyFp:
        if self.is_zero() or self.lead == 1:
            return self
        return self * inv_mod(self.lead, self.p)

    def _same(self, other: PolyFp):
        if not isinstance(other, PolyFp):
            raise TypeError(f"expected PolyFp, got {type(other).__name__}")
        if other.p != self.p:
            raise ContextMismatch(f"moduli differ: {self.p} vs {other.p}")

    def __eq__(self, other):
        return isinstance(other, PolyFp) and self.p == other.p and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.p, self.coeffs))

    def __add__(self, other):
        self._same(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return PolyFp([x + y for x, y in zip(a, b)], self.p)

    def __neg__(self):
        return PolyFp([-c for c in self.coeffs], self.p)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return PolyFp([c * other for c in self.coeffs], self.p)
        self._same(other)
        if self.is_zero() or other.is_zero():
            return PolyFp([], self.p)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return PolyFp(out, self.p)

    __rmul__ = __mul__

    def __divmod__(self, other):
        return poly_divmod(self, other)

    def __floordiv__(self, other):
        return poly_divmod(self, other)[0]

    def __mod__(self, other):
        return poly_divmod(self, other)[1]

    def __pow__(self, e: int):
        result, base = PolyFp([1], self.p), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def powmod(self, e: int, mod: PolyFp) -> PolyFp:
        result, base = PolyFp([1], self.p) % mod, self % mod
        while e:
            if e & 1:
                result = (result * base) % mod
            base = (base * base) % mod
            e >>= 1
        return result

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % self.p
        return acc

    def derivative(self) -> PolyFp:
        return PolyFp([i * c for i, c in enumerate(self.coeffs)][1:], self.p)

    def sort_key(self):
        """Degree first, then coefficients from the leading term down."""
        return (len(self.coeffs), tuple(reversed(self.coeffs)))

    def to_list(self) -> list[int]:
        return list(self.coeffs)

    def __str__(self):
        return format_poly(self.coeffs)

    def __repr__(self):
        return f"PolyFp({list(self.coeffs)}, p={self.p})"


def format_poly(coeffs, var: str = "a", fmt=str) -> str:
    """Descending-power text form, e.g. ``a^3 + a + 1``."""
    terms = []
    for e in range(len(coeffs) - 1, -1, -1):
        c = coeffs[e]
        if not c:
            continue
        mono = "" if e == 0 else (var if e == 1 else f"{var}^{e}")
        cs = fmt(c)
        if not mono:
            terms.append(cs)
        elif cs == "1":
            terms.append(mono)
        elif " + " in cs:
            terms.append(f"({cs}){mono}")
        else:
            terms.append(f"{cs}{mono}")
    return " + ".join(terms) if terms else "0"


def poly_divmod(f: PolyFp, g: PolyFp) -> tuple[PolyFp, PolyFp]:
    f._same(g)
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    p = f.p
    r = list(f.coeffs)
    dg = len(g.coeffs) - 1
    if len(r) - 1 < dg:
        return PolyFp([], p), f
    inv = inv_mod(g.lead, p)
    q = [0] * (len(r) - dg)
    for i in range(len(r) - 1, dg - 1, -1):
        c = r[i] * inv % p
        if c:
            q[i - dg] = c
            for j, b in enumerate(g.coeffs):
                r[i - dg + j] = (r[i - dg + j] - c * b) % p
    return PolyFp(q, p), PolyFp(r[:dg], p)


def poly_gcd_ext(f: PolyFp, g: PolyFp) -> tuple[PolyFp, PolyFp, PolyFp]:
    """Return ``(d, s, t)`` with ``s*f + t*g == d``, d monic."""
    f._same(g)
    p = f.p
    if f.is_zero() and g.is_zero():
        raise PreconditionError("gcd of two zero polynomials is undefined")
    r0, r1 = f, g
    s0, s1 = PolyFp([1], p), PolyFp([], p)
    t0, t1 = PolyFp([], p), PolyFp([1], p)
    while not r1.is_zero():
        q, r = poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    inv = inv_mod(r0.lead, p)
    return r0 * inv, s0 * inv, t0 * inv


def poly_gcd(f: PolyFp, g: PolyFp) -> PolyFp:
    return poly_gcd_ext(f, g)[0]


# -- factorization -----------------------------------------------------------

@dataclass(frozen=True)
class Factorization:
    unit: int
    factors: tuple  # ((PolyFp, multiplicity), ...) sorted by PolyFp.sort_key
    p: int

    def expand(self) -> PolyFp:
        out = PolyFp([self.unit], self.p)
        for f, e in self.factors:
            out = out * f**e
        return out

    def irreducibles(self) -> list[PolyFp]:
        return [f for f, _ in self.factors]

    def __str__(self):
        parts = []
        if self.unit != 1:
            parts.append(str(self.unit))
        for f, e in self.factors:
            parts.append(f"({f})" + (f"^{e}" if e > 1 else ""))
        return "".join(parts) or "1"


def _pth_root(f: PolyFp) -> PolyFp:
    p = f.p
    return PolyFp(f.coeffs[::p], p)


def squarefree_decomposition(f: PolyFp) -> list[tuple[PolyFp, int]]:
    """Monic squarefree factors with multiplicities (Yun-style, char p aware)."""
    f = f.monic()
    p = f.p
    one = PolyFp([1], p)
    if f.degree < 1:
        return []
    df = f.derivative()
    if df.is_zero():
        return [(g, e * p) for g, e in squarefree_decomposition(_pth_root(f))]
    out = []
    c = poly_gcd(f, df)
    w = f // c
    i = 1
    while w != one:
        y = poly_gcd(w, c)
        z = w // y
        if z != one:
            out.append((z, i))
        i += 1
        w = y
        c = c // y
    if c != one:
        out += [(g, e * p) for g, e in squarefree_decomposition(_pth_root(c))]
    return out


def distinct_degree(f: PolyFp) -> list[tuple[PolyFp, int]]:
    """Split a squarefree monic f into products of same-degree irreducibles."""
    p = f.p
    x = PolyFp([0, 1], p)
    out = []
    h = x
    d = 1
    while f.degree >= 2 * d:
        h = h.powmod(p, f)
        g = poly_gcd(h - x, f)
        if not g.is_one():
            out.append((g, d))
            f = f // g
            h = h % f
        d += 1
    if f.degree >= 1:
        out.append((f, f.degree))
    return out


def _monic_polys(degree: int, p: int):
    for tail in itertools.product(range(p), repeat=degree):
        yield PolyFp(list(reversed(tail)) + [1], p)


def equal_degree(g: PolyFp, d: int, rng: random.Random, attempts: int = 64) -> list[PolyFp]:
    """Split g, a product of distinct monic irreducibles of degree d."""
    p = g.p
    n = g.degree
    if n == d:
        return [g]
    for _ in range(attempts):
        a = PolyFp([rng.randrange(p) for _ in range(n)], p)
        if a.degree < 1:
            continue
        if p == 2:
            b = PolyFp([], p)
            t = a % g
            for _ in range(d):
                b = b + t
                t = (t * t) % g
        else:
            b = a.powmod((p**d - 1) // 2, g) - PolyFp([1], p)
        h = poly_gcd(b, g) if not b.is_zero() else g
        if 0 < h.degree < n:
            return equal_degree(h, d, rng, attempts) + equal_degree(g // h, d, rng, attempts)
    # deterministic fallback: trial division by every monic candidate of degree d
    for cand in _monic_polys(d, p):
        q, r = poly_divmod(g, cand)
        if r.is_zero():
            return [cand] + equal_degree(q, d, rng, attempts)
    raise AssertionError("equal-degree splitting found no factor")  # unreachable for valid input


def factor_poly(f: PolyFp, seed: int = 0) -> Factorization:
    """Complete factorization into monic irreducibles. Deterministic for a given seed."""
    check_prime(f.p, allow_two=True)
    if f.degree < 1:
        raise PreconditionError("factor_poly needs a polynomial of degree >= 1")
    rng = random.Random(seed)
    counts: dict[PolyFp, int] = {}
    for sq, mult in squarefree_decomposition(f):
        for block, d in distinct_degree(sq):
            for irr in equal_degree(block, d, rng):
                counts[irr] = counts.get(irr, 0) + mult
    factors = tuple(sorted(counts.items(), key=lambda fe: fe[0].sort_key()))
    return Factorization(unit=f.lead, factors=factors, p=f.p)


def is_irreducible(f: PolyFp) -> bool:
    """Trial division by all monic polynomials of degree 1..deg/2."""
    if f.degree < 1:
        return False
    for d in range(1, f.degree // 2 + 1):
        for cand in _monic_polys(d, f.p):
            if (f % cand).is_zero():
                return False
    return True


def divisors_of(f: PolyFp, seed: int = 0) -> list[PolyFp]:
    """All monic divisors of f, sorted by degree then coefficients."""
    if f.is_zero():
        raise PreconditionError("the zero polynomial has infinitely many divisors")
    p = f.p
    if f.degree == 0:
        return [PolyFp([1], p)]
    fac = factor_poly(f, seed)
    out = set()
    for exps in itertools.product(*[range(e + 1) for _, e in fac.factors]):
        d = PolyFp([1], p)
        for (g, _), e in zip(fac.factors, exps):
            d = d * g**e
        out.add(d)
    return sorted(out, key=PolyFp.sort_key)


def reciprocal(f: PolyFp) -> PolyFp:
    """Monic normalization of a^{deg f} f(1/a)."""
    if f.is_zero() or f.coeffs[0] == 0:
        raise PreconditionError(f"reciprocal needs a nonzero constant term: {f}")
    return PolyFp(list(reversed(f.coeffs)), f.p).monic()


# -- polynomials over R ------------------------------------------------------

class PolyR:
    __slots__ = ("coeffs", "ctx")

    def __init__(self, coeffs, ctx: RingContext):
        self.ctx = ctx
        c = []
        for x in coeffs:
            if isinstance(x, RingElem):
                if x.ctx != ctx:
                    raise ContextMismatch(f"coefficient over {x.ctx}, expected {ctx}")
                c.append(x)
            else:
                c.append(RingElem.from_coeffs(x, ctx))
        while c and c[-1].is_zero():
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def from_fp(cls, f: PolyFp, ctx: RingContext, scalar: RingElem | None = None) -> PolyR:
        if f.p != ctx.p:
            raise ContextMismatch(f"moduli differ: {f.p} vs {ctx.p}")
        s = ctx.one() if scalar is None else scalar
        return cls([s * c for c in f.coeffs], ctx)

    @classmethod
    def monomial(cls, e: int, ctx: RingContext, coeff: RingElem | None = None) -> PolyR:
        c = ctx.one() if coeff is None else coeff
        return cls([ctx.zero()] * e + [c], ctx)

    @classmethod
    def from_vector(cls, vec, ctx: RingContext) -> PolyR:
        return cls(vec, ctx)

    def to_vector(self, m: int) -> tuple:
        if len(self.coeffs) > m:
            raise PreconditionError(f"degree {self.degree} does not fit length {m}")
        return self.coeffs + (self.ctx.zero(),) * (m - len(self.coeffs))

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def _same(self, other: PolyR):
        if not isinstance(other, PolyR):
            raise TypeError(f"expected PolyR, got {type(other).__name__}")
        if other.ctx != self.ctx:
            raise ContextMismatch(f"rings differ: {self.ctx} vs {other.ctx}")

    def __eq__(self, other):
        return isinstance(other, PolyR) and self.ctx == other.ctx and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ctx, self.coeffs))

    def __add__(self, other):
        self._same(other)
        z = self.ctx.zero()
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (z,) * (n - len(self.coeffs))
        b = other.coeffs + (z,) * (n - len(other.coeffs))
        return PolyR([x + y for x, y in zip(a, b)], self.ctx)

    def __neg__(self):
        return PolyR([-c for c in self.coeffs], self.ctx)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, RingElem)):
            return PolyR([c * other for c in self.coeffs], self.ctx)
        self._same(other)
        if self.is_zero() or other.is_zero():
            return PolyR([], self.ctx)
        out = [self.ctx.zero()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return PolyR(out, self.ctx)

    def __rmul__(self, other):
        if isinstance(other, (int, RingElem)):
            return self * other
        return NotImplemented

    def to_lists(self) -> list[list[int]]:
        return [list(c.coeffs) for c in self.coeffs]

    def __str__(self):
        def fmt(c: RingElem) -> str:
            s = str(c)
            return s

        return format_poly(self.coeffs, fmt=fmt)

    def __repr__(self):
        return f"PolyR({self.to_lists()}, p={self.ctx.p}, k={self.ctx.k})"


def x_pow_minus(m: int, unit: RingElem) -> PolyR:
    """The modulus a^m - unit as a polynomial over R."""
    ctx = unit.ctx
    return PolyR([-unit] + [ctx.zero()] * (m - 1) + [ctx.one()], ctx)


def qr_reduce(f: PolyR, m: int, unit: RingElem) -> PolyR:
    """Reduce f modulo a^m - unit by repeatedly substituting a^m -> unit."""
    c = list(f.coeffs)
    for i in range(len(c) - 1, m - 1, -1):
        if not c[i].is_zero():
            c[i - m] = c[i - m] + unit * c[i]
            c[i] = f.ctx.zero()
    return PolyR(c, f.ctx)


def qr_mul(f: PolyR, g: PolyR, m: int, unit: RingElem | None = None) -> PolyR:
    """Product in R[a]/(a^m - unit); unit defaults to 1 - 2u^k."""
    f._same(g)
    if f.degree >= m or g.degree >= m:
        raise PreconditionError(f"operands must have degree < {m}")
    if unit is None:
        unit = lambda_unit(f.ctx)
    return qr_reduce(f * g, m, unit)


def mu_map(f: PolyR) -> PolyR:
    """l(a) -> l((1 - 2u^k) a), i.e. coefficient i is multiplied by (1 - 2u^k)^i."""
    lam = lambda_unit(f.ctx)
    return PolyR([c * lam**i for i, c in enumerate(f.coeffs)], f.ctx)


# -- parsing -----------------------------------------------------------------

_TERM = re.compile(r"^(\d+)?\*?(?:([a-z])(?:\^(\d+))?)?$")


def parse_poly(text: str, p: int, var: str = "a") -> PolyFp:
    """Parse ``a^3+a+1``, ``2a^2-a+4``, ``a^7-1`` etc.; coefficients reduced mod p."""
    s = re.sub(r"\s+", "", text or "")
    if not s:
        raise PolySyntaxError("empty polynomial")
    if s[0] not in "+-":
        s = "+" + s
    pieces = re.findall(r"[+-][^+-]*", s)
    if "".join(pieces) != s:
        raise PolySyntaxError(f"cannot parse polynomial {text!r}")
    coeffs: dict[int, int] = {}
    for piece in pieces:
        sign = -1 if piece[0] == "-" else 1
        body = piece[1:]
        mt = _TERM.match(body)
        if not body or not mt or (mt.group(1) is None and mt.group(2) is None):
            raise PolySyntaxError(f"bad term {piece!r} in {text!r}")
        coef, v, exp = mt.groups()
        if v is not None and v != var:
            raise PolySyntaxError(f"unknown variable {v!r} in {text!r} (expected {var!r})")
        if v is None and exp is not None:
            raise PolySyntaxError(f"bad term {piece!r}")
        c = int(coef) if coef is not None else 1
        e = 0 if v is None else (int(exp) if exp is not None else 1)
        coeffs[e] = coeffs.get(e, 0) + sign * c
    deg = max(coeffs)
    return PolyFp([coeffs.get(i, 0) for i in range(deg + 1)], p)
