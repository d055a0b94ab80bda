"""The ring R = F_p[u]/(u^{k+1} - u).

An element a_0 + a_1 u + ... + a_k u^k is stored as the tuple (a_0, ..., a_k).
Powers u^e with e >= k+1 reduce to u^{((e-1) mod k) + 1}; u^0 stays 1.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property, lru_cache

import numpy as np

from .errors import ContextMismatch, ParameterError, PreconditionError
from .gf_prime import check_prime, inv_mod


@dataclass(frozen=True)
class RingContext:
    p: int
    k: int

    def __post_init__(self):
        check_prime(self.p)
        if not isinstance(self.k, int) or self.k < 1:
            raise ParameterError(f"k must be >= 1, got {self.k!r}")

    @property
    def size(self) -> int:
        return self.k + 1

    @property
    def inv2(self) -> int:
        return inv_mod(2, self.p)

    def reduce_exponent(self, e: int) -> int:
        if e <= self.k:
            return e
        return (e - 1) % self.k + 1

    def element(self, coeffs) -> RingElem:
        return RingElem.from_coeffs(coeffs, self)

    def zero(self) -> RingElem:
        return RingElem((0,) * self.size, self)

    def one(self) -> RingElem:
        return RingElem((1,) + (0,) * self.k, self)

    def u_power(self, e: int) -> RingElem:
        c = [0] * self.size
        c[self.reduce_exponent(e)] = 1
        return RingElem(tuple(c), self)

    def scalar(self, c: int) -> RingElem:
        return RingElem((c % self.p,) + (0,) * self.k, self)

    def elements(self):
        for c in itertools.product(range(self.p), repeat=self.size):
            yield RingElem(c, self)

    def __str__(self):
        return f"F_{self.p}[u]/(u^{self.k + 1} - u)"


@dataclass(frozen=True)
class RingElem:
    coeffs: tuple
    ctx: RingContext = field(compare=True)

    @classmethod
    def from_coeffs(cls, coeffs, ctx: RingContext) -> RingElem:
        coeffs = [int(c) % ctx.p for c in coeffs]
        if len(coeffs) != ctx.size:
            raise ParameterError(f"expected {ctx.size} coefficients, got {len(coeffs)}")
        return cls(tuple(coeffs), ctx)

    def _check(self, other: RingElem) -> RingContext:
        if not isinstance(other, RingElem):
            raise TypeError(f"expected RingElem, got {type(other).__name__}")
        if other.ctx != self.ctx:
            raise ContextMismatch(f"rings differ: {self.ctx} vs {other.ctx}")
        return self.ctx

    def __add__(self, other):
        if isinstance(other, int):
            other = self.ctx.scalar(other)
        return ring_add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = self.ctx.scalar(other)
        return ring_sub(self, other)

    def __rsub__(self, other):
        return ring_sub(self.ctx.scalar(other), self)

    def __neg__(self):
        return ring_neg(self)

    def __mul__(self, other):
        if isinstance(other, int):
            return ring_scalar_mul(self, other)
        if isinstance(other, RingElem):
            return ring_mul(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int):
            return ring_scalar_mul(self, other)
        return NotImplemented

    def __pow__(self, e: int) -> RingElem:
        result, base = self.ctx.one(), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    def __str__(self):
        terms = []
        for j, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if j == 0 else ("u" if j == 1 else f"u^{j}")
            if not mono:
                terms.append(str(c))
            else:
                terms.append(mono if c == 1 else f"{c}{mono}")
        return " + ".join(terms) if terms else "0"


def ring_add(x: RingElem, y: RingElem) -> RingElem:
    ctx = x._check(y)
    return RingElem(tuple((a + b) % ctx.p for a, b in zip(x.coeffs, y.coeffs)), ctx)


def ring_sub(x: RingElem, y: RingElem) -> RingElem:
    ctx = x._check(y)
    return RingElem(tuple((a - b) % ctx.p for a, b in zip(x.coeffs, y.coeffs)), ctx)


def ring_neg(x: RingElem) -> RingElem:
    return RingElem(tuple(-a % x.ctx.p for a in x.coeffs), x.ctx)


def ring_scalar_mul(x: RingElem, c: int) -> RingElem:
    return RingElem(tuple(a * c % x.ctx.p for a in x.coeffs), x.ctx)


def ring_mul(x: RingElem, y: RingElem) -> RingElem:
    ctx = x._check(y)
    out = [0] * ctx.size
    for i, a in enumerate(x.coeffs):
        if a == 0:
            continue
        for j, b in enumerate(y.coeffs):
            if b:
                t = ctx.reduce_exponent(i + j)
                out[t] = (out[t] + a * b) % ctx.p
    return RingElem(tuple(out), ctx)


def lambda_unit(ctx: RingContext) -> RingElem:
    """The unit 1 - 2u^k. It squares to 1."""
    c = [0] * ctx.size
    c[0] = 1
    c[ctx.k] = (c[ctx.k] - 2) % ctx.p
    return RingElem(tuple(c), ctx)


def sigma(i: int, ctx: RingContext) -> RingElem:
    """The elements sigma_1 = 1 - u^k, sigma_2 = (u^{k-1} + u^k)/2, sigma_3 = (u^k - u^{k-1})/2.

    They are only genuine orthogonal idempotents when k == 2; see
    :func:`idempotent_report`.
    """
    k, p = ctx.k, ctx.p
    if i == 1:
        c = [0] * ctx.size
        c[0] = 1
        c[k] = (c[k] - 1) % p
        return RingElem(tuple(c), ctx)
    if i not in (2, 3):
        raise ParameterError(f"sigma index must be 1, 2 or 3, got {i}")
    if k < 2:
        raise PreconditionError("sigma_2 and sigma_3 need k >= 2 (u^{k-1} collapses to 1 when k = 1)")
    h = ctx.inv2
    c = [0] * ctx.size
    c[k - 1] = h if i == 2 else (-h) % p
    c[k] = h
    return RingElem(tuple(c), ctx)


def sigmas(ctx: RingContext) -> tuple[RingElem, RingElem, RingElem]:
    return sigma(1, ctx), sigma(2, ctx), sigma(3, ctx)


def ring_eval(x: RingElem, c: int) -> int:
    """Substitute u -> c. Only allowed when that is a ring homomorphism (c^{k+1} == c)."""
    p, k = x.ctx.p, x.ctx.k
    c %= p
    if pow(c, k + 1, p) != c:
        raise PreconditionError(f"u -> {c} is not a homomorphism: {c}^{k + 1} != {c} mod {p}")
    return sum(a * pow(c, j, p) for j, a in enumerate(x.coeffs)) % p


@lru_cache(maxsize=None)
def _u_matrix(ctx: RingContext) -> np.ndarray:
    n = ctx.size
    m = np.zeros((n, n), dtype=np.int64)
    for j in range(n):
        m[ctx.reduce_exponent(j + 1), j] = 1
    return m


def mul_matrix(x: RingElem) -> np.ndarray:
    """Matrix M with ``M @ y.coeffs == (x * y).coeffs`` (mod p)."""
    ctx = x.ctx
    n = ctx.size
    m = np.zeros((n, n), dtype=np.int64)
    for j in range(n):
        m[:, j] = ring_mul(x, ctx.u_power(j)).coeffs
    return m


def u_matrix(ctx: RingContext) -> np.ndarray:
    return _u_matrix(ctx)


@dataclass(frozen=True)
class IdempotentReport:
    ctx: RingContext
    sigma: tuple
    lam: RingElem
    squares: tuple          # sigma_i^2
    products: dict          # (i, j) -> sigma_i sigma_j for i < j
    total: RingElem         # sigma_1 + sigma_2 + sigma_3
    lambda_products: tuple  # lambda * sigma_i
    lambda_square: RingElem

    @cached_property
    def verdicts(self) -> dict[str, bool]:
        ctx = self.ctx
        zero, one = ctx.zero(), ctx.one()
        v = {}
        for i in range(3):
            v[f"sigma{i + 1}^2 = sigma{i + 1}"] = self.squares[i] == self.sigma[i]
        for (i, j), prod in self.products.items():
            v[f"sigma{i}*sigma{j} = 0"] = prod == zero
        v["sigma1 + sigma2 + sigma3 = 1"] = self.total == one
        v["lambda*sigma1 = sigma1"] = self.lambda_products[0] == self.sigma[0]
        v["lambda*sigma2 = -sigma2"] = self.lambda_products[1] == -self.sigma[1]
        v["lambda*sigma3 = -sigma3"] = self.lambda_products[2] == -self.sigma[2]
        v["lambda^2 = 1"] = self.lambda_square == one
        return v

    def all_hold(self) -> bool:
        return all(self.verdicts.values())

    def failed(self) -> list[str]:
        return [name for name, ok in self.verdicts.items() if not ok]

    def sigma2_square_residual(self) -> RingElem:
        """sigma_2^2 - sigma_2; zero exactly when sigma_2 is idempotent."""
        return self.squares[1] - self.sigma[1]


def idempotent_report(ctx: RingContext) -> IdempotentReport:
    s = sigmas(ctx)
    lam = lambda_unit(ctx)
    return IdempotentReport(
        ctx=ctx,
        sigma=s,
        lam=lam,
        squares=tuple(x * x for x in s),
        products={(i + 1, j + 1): s[i] * s[j] for i in range(3) for j in range(i + 1, 3)},
        total=s[0] + s[1] + s[2],
        lambda_products=tuple(lam * x for x in s),
        lambda_square=lam * lam,
    )
