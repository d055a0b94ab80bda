"""Linear codes over F_p and R-submodule codes of R^m.

A code over R is stored through its F_p expansion: coordinate i of a word in
R^m occupies positions i*(k+1) .. i*(k+1)+k of a vector in F_p^{(k+1)m}. The
F_p span of the generators and all their u-multiples is exactly the R-span,
so membership, equality and duality reduce to F_p linear algebra.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path

import numpy as np

from . import linalg
from .errors import CapExceeded, ContextMismatch, ParameterError, PreconditionError, SchemaError
from .gf_prime import check_prime
from .polyring import (
    PolyFp,
    PolyR,
    divisors_of,
    poly_divmod,
    poly_gcd,
    poly_gcd_ext,
    qr_mul,
    qr_reduce,
    reciprocal,
)
from .ring_r import (
    RingContext,
    RingElem,
    idempotent_report,
    lambda_unit,
    mul_matrix,
    sigmas,
    u_matrix,
)

DEFAULT_CAP = 10**6

SIGNS = {"plus": 1, "minus": -1}
UNITS = ("cyclic", "negacyclic", "lambda")


# -- vectors -----------------------------------------------------------------

def expand(vec, ctx: RingContext) -> np.ndarray:
    return np.array([c for x in vec for c in x.coeffs], dtype=np.int64)


def collapse(arr, ctx: RingContext) -> tuple:
    arr = np.asarray(arr, dtype=np.int64).reshape(-1, ctx.size) % ctx.p
    return tuple(RingElem(tuple(int(c) for c in row), ctx) for row in arr)


def _as_ring_vector(vec, ctx: RingContext) -> tuple:
    out = []
    for x in vec:
        if isinstance(x, RingElem):
            if x.ctx != ctx:
                raise ContextMismatch(f"entry over {x.ctx}, expected {ctx}")
            out.append(x)
        else:
            out.append(RingElem.from_coeffs(x, ctx))
    return tuple(out)


def unit_element(unit: str, ctx: RingContext) -> RingElem:
    if unit == "cyclic":
        return ctx.one()
    if unit == "negacyclic":
        return -ctx.one()
    if unit == "lambda":
        return lambda_unit(ctx)
    raise ParameterError(f"unknown unit {unit!r}; expected one of {UNITS}")


# -- codes -------------------------------------------------------------------

class LinearCodeFp:
    """Linear code of length m over F_p given by a spanning set of rows."""

    def __init__(self, rows, m: int, p: int, unit: str = "cyclic"):
        check_prime(p)
        self.m, self.p, self.unit = m, p, unit
        mat = linalg.as_matrix(rows, m, p) if len(rows) else np.zeros((0, m), dtype=np.int64)
        self.rows = tuple(tuple(int(x) for x in r) for r in mat)
        self.basis, self.pivots = linalg.rref(mat, p)

    @classmethod
    def full(cls, m: int, p: int) -> LinearCodeFp:
        return cls(np.eye(m, dtype=np.int64), m, p)

    @classmethod
    def zero(cls, m: int, p: int) -> LinearCodeFp:
        return cls([], m, p)

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    @property
    def size(self) -> int:
        return self.p**self.dim

    def contains(self, v) -> bool:
        return linalg.in_span(self.basis, np.asarray(v, dtype=np.int64), self.p)

    def codewords(self, cap: int = DEFAULT_CAP) -> np.ndarray:
        return linalg.span_elements(self.basis, self.p, cap)

    def __eq__(self, other):
        return (
            isinstance(other, LinearCodeFp)
            and (self.p, self.m) == (other.p, other.m)
            and np.array_equal(self.basis, other.basis)
        )

    def __hash__(self):
        return hash((self.p, self.m, self.basis.tobytes()))

    def __repr__(self):
        return f"LinearCodeFp(p={self.p}, m={self.m}, dim={self.dim})"


class ConstaCodeR:
    """R-submodule of R^m, tagged with the unit its shift uses."""

    def __init__(self, generators, m: int, ctx: RingContext, unit: str = "lambda"):
        unit_element(unit, ctx)
        self.m, self.ctx, self.unit = m, ctx, unit
        gens = tuple(_as_ring_vector(g, ctx) for g in generators)
        for g in gens:
            if len(g) != m:
                raise ParameterError(f"generator of length {len(g)}, expected {m}")
        self.generators = gens
        n = ctx.size * m
        if gens:
            base = np.array([expand(g, ctx) for g in gens], dtype=np.int64)
            blocks = [base]
            ut = u_matrix(ctx).T
            cur = base
            for _ in range(ctx.k):
                cur = (cur.reshape(-1, m, ctx.size) @ ut).reshape(-1, n) % ctx.p
                blocks.append(cur)
            mat = np.vstack(blocks)
        else:
            mat = np.zeros((0, n), dtype=np.int64)
        self.basis, self.pivots = linalg.rref(mat, ctx.p)

    @classmethod
    def from_fp_basis(cls, arr, m: int, ctx: RingContext, unit: str = "lambda") -> ConstaCodeR:
        arr = np.asarray(arr, dtype=np.int64).reshape(-1, ctx.size * m)
        return cls([collapse(r, ctx) for r in arr], m, ctx, unit)

    @classmethod
    def full(cls, m: int, ctx: RingContext, unit: str = "lambda") -> ConstaCodeR:
        one, zero = ctx.one(), ctx.zero()
        return cls([[one if i == j else zero for j in range(m)] for i in range(m)], m, ctx, unit)

    @classmethod
    def zero(cls, m: int, ctx: RingContext, unit: str = "lambda") -> ConstaCodeR:
        return cls([], m, ctx, unit)

    @property
    def p(self) -> int:
        return self.ctx.p

    @property
    def length(self) -> int:
        return self.ctx.size * self.m

    @property
    def dim(self) -> int:
        """Dimension of the code as an F_p vector space."""
        return self.basis.shape[0]

    @property
    def size(self) -> int:
        return self.p**self.dim

    def contains(self, vec) -> bool:
        if not isinstance(vec, np.ndarray):
            vec = expand(_as_ring_vector(vec, self.ctx), self.ctx)
        return linalg.in_span(self.basis, vec, self.p)

    def codewords(self, cap: int = DEFAULT_CAP) -> np.ndarray:
        """All codewords as expanded F_p rows."""
        return linalg.span_elements(self.basis, self.p, cap)

    def with_unit(self, unit: str) -> ConstaCodeR:
        return ConstaCodeR(self.generators, self.m, self.ctx, unit)

    def same_set(self, other: ConstaCodeR) -> bool:
        return (
            self.ctx == other.ctx
            and self.m == other.m
            and np.array_equal(self.basis, other.basis)
        )

    def __eq__(self, other):
        return isinstance(other, ConstaCodeR) and self.same_set(other)

    def __hash__(self):
        return hash((self.ctx, self.m, self.basis.tobytes()))

    def __repr__(self):
        return f"ConstaCodeR(p={self.p}, k={self.ctx.k}, m={self.m}, unit={self.unit}, |L|={self.p}^{self.dim})"


@dataclass(frozen=True)
class SigmaTriple:
    L1: LinearCodeFp
    L2: LinearCodeFp
    L3: LinearCodeFp
    warnings: tuple = field(default=(), compare=False)

    def __post_init__(self):
        ps = {c.p for c in self}
        ms = {c.m for c in self}
        if len(ps) != 1 or len(ms) != 1:
            raise ContextMismatch("components of a sigma triple must share p and m")

    def __iter__(self):
        return iter((self.L1, self.L2, self.L3))

    @property
    def p(self) -> int:
        return self.L1.p

    @property
    def m(self) -> int:
        return self.L1.m

    def generator_polynomials(self) -> tuple[PolyFp, PolyFp, PolyFp]:
        return tuple(generator_polynomial(c, s) for c, s in zip(self, TRIPLE_SIGNS))

    def dual(self) -> SigmaTriple:
        return SigmaTriple(*(dual_fp(c) for c in self))


TRIPLE_SIGNS = ("plus", "minus", "minus")


# -- shifts and invariance ---------------------------------------------------

def shift(v, kind: str, p: int | None = None) -> tuple:
    """alpha: rotate right; beta: rotate right, negate the wrapped entry;
    gamma: rotate right, multiply the wrapped entry by 1 - 2u^k (R only)."""
    v = tuple(v)
    if not v:
        return v
    last, rest = v[-1], v[:-1]
    over_r = isinstance(last, RingElem)
    if kind == "alpha":
        head = last
    elif kind == "beta":
        head = -last if over_r else (-last) % p
    elif kind == "gamma":
        if not over_r:
            raise PreconditionError("gamma shift is only defined for vectors over R")
        head = lambda_unit(last.ctx) * last
    else:
        raise ParameterError(f"unknown shift kind {kind!r}")
    if not over_r and p is not None:
        return (head % p,) + tuple(x % p for x in rest)
    return (head,) + rest


@lru_cache(maxsize=None)
def _shift_matrix(kind: str, m: int, p: int, ctx: RingContext | None) -> np.ndarray:
    b = 1 if ctx is None else ctx.size
    s = np.zeros((m * b, m * b), dtype=np.int64)
    eye = np.eye(b, dtype=np.int64)
    for i in range(m - 1):
        s[(i + 1) * b:(i + 2) * b, i * b:(i + 1) * b] = eye
    if kind == "alpha":
        wrap = eye
    elif kind == "beta":
        wrap = -eye
    elif kind == "gamma":
        if ctx is None:
            raise PreconditionError("gamma shift is only defined for codes over R")
        wrap = mul_matrix(lambda_unit(ctx))
    else:
        raise ParameterError(f"unknown shift kind {kind!r}")
    s[0:b, (m - 1) * b:m * b] = wrap
    return s % p


def shift_matrix(kind: str, m: int, p: int, ctx: RingContext | None = None) -> np.ndarray:
    """Matrix of a shift acting on (expanded) column vectors."""
    return _shift_matrix(kind, m, p, ctx)


def is_invariant(code, kind: str) -> bool:
    ctx = code.ctx if isinstance(code, ConstaCodeR) else None
    s = shift_matrix(kind, code.m, code.p, ctx)
    if code.basis.shape[0] == 0:
        return True
    return linalg.in_span(code.basis, (code.basis @ s.T) % code.p, code.p)


# -- polynomial view ---------------------------------------------------------

def vector_to_poly(vec, ctx: RingContext) -> PolyR:
    return PolyR(_as_ring_vector(vec, ctx), ctx)


def poly_to_vector(f: PolyR, m: int) -> tuple:
    return f.to_vector(m)


def poly_repr(code: ConstaCodeR) -> list[PolyR]:
    """Ideal generators: the generator rows read as polynomials in a."""
    return [vector_to_poly(g, code.ctx) for g in code.generators]


def is_ideal(code: ConstaCodeR, unit: str | None = None) -> bool:
    """Whether the polynomial image of the code is closed under multiplication by a
    in R[a]/(a^m - unit). Computed with polynomial arithmetic, not with shifts."""
    ctx, m = code.ctx, code.m
    c = unit_element(unit or code.unit, ctx)
    a = PolyR.monomial(1, ctx) if m > 1 else PolyR([c], ctx)
    for row in code.basis:
        f = vector_to_poly(collapse(row, ctx), ctx)
        g = qr_mul(a, f, m, c)
        if not code.contains(expand(g.to_vector(m), ctx)):
            return False
    return True


def ideal_code(gens, m: int, ctx: RingContext, unit: str = "lambda") -> ConstaCodeR:
    """The ideal generated by ``gens`` in R[a]/(a^m - unit), as a code."""
    c = unit_element(unit, ctx)
    rows = []
    for g in gens:
        cur = qr_reduce(g, m, c)
        for _ in range(m):
            rows.append(cur.to_vector(m))
            cur = qr_reduce(cur * PolyR.monomial(1, ctx), m, c)
    return ConstaCodeR(rows, m, ctx, unit)


def cyclic_code(h: PolyFp, m: int, sign: str = "plus") -> LinearCodeFp:
    """The ideal <h> in F_p[a]/(a^m - 1) (plus) or F_p[a]/(a^m + 1) (minus)."""
    p = h.p
    mod = PolyFp.x_pow_pm1(m, SIGNS[sign], p)
    rows = []
    cur = h % mod
    x = PolyFp([0, 1], p)
    for _ in range(m):
        rows.append(list(cur.coeffs) + [0] * (m - len(cur.coeffs)))
        cur = (cur * x) % mod
    return LinearCodeFp(rows, m, p, "cyclic" if sign == "plus" else "negacyclic")


def generator_polynomial(code: LinearCodeFp, sign: str = "plus") -> PolyFp:
    """Monic generator of a cyclic (plus) or negacyclic (minus) code; the zero
    code gets a^m -+ 1 by convention."""
    kind = "alpha" if sign == "plus" else "beta"
    if sign not in SIGNS:
        raise ParameterError(f"sign must be 'plus' or 'minus', got {sign!r}")
    if not is_invariant(code, kind):
        raise PreconditionError(f"code is not {kind}-invariant")
    g = PolyFp.x_pow_pm1(code.m, SIGNS[sign], code.p)
    for row in code.basis:
        g = poly_gcd(g, PolyFp(row, code.p))
    return g


# -- sigma decomposition -----------------------------------------------------

def _sigma_gate(ctx: RingContext, what: str) -> None:
    if ctx.k != 2:
        failed = idempotent_report(ctx).failed() if ctx.k >= 2 else ["sigma_2, sigma_3 undefined"]
        raise PreconditionError(
            f"{what} needs k = 2; at k = {ctx.k} these identities fail: {', '.join(failed)}"
        )


@lru_cache(maxsize=None)
def _eval_matrix(ctx: RingContext, m: int, c: int) -> np.ndarray:
    e = np.zeros((m, ctx.size * m), dtype=np.int64)
    powers = [pow(c, j, ctx.p) for j in range(ctx.size)]
    for i in range(m):
        e[i, i * ctx.size:(i + 1) * ctx.size] = powers
    return e


def decompose(code: ConstaCodeR) -> SigmaTriple:
    """Component codes: images of the code under u -> 0, 1, -1 coordinatewise."""
    ctx, m, p = code.ctx, code.m, code.p
    if ctx.k % 2:
        raise PreconditionError(f"decompose needs even k (u -> -1 is not a homomorphism at k = {ctx.k})")
    warnings = ()
    if ctx.k != 2:
        warnings = tuple(f"identity fails at k={ctx.k}: {name}" for name in idempotent_report(ctx).failed())
    comps = []
    for c in (0, 1, p - 1):
        img = (code.basis @ _eval_matrix(ctx, m, c).T) % p
        comps.append(LinearCodeFp(img, m, p))
    return SigmaTriple(*comps, warnings=warnings)


def build_from_triple(t: SigmaTriple, ctx: RingContext) -> ConstaCodeR:
    """sigma_1 L1 + sigma_2 L2 + sigma_3 L3 as a code over R."""
    _sigma_gate(ctx, "build_from_triple")
    if t.p != ctx.p:
        raise ContextMismatch(f"triple over F_{t.p}, ring over F_{ctx.p}")
    gens = []
    for s, comp in zip(sigmas(ctx), t):
        for row in comp.basis:
            gens.append([s * int(x) for x in row])
    return ConstaCodeR(gens, t.m, ctx, "lambda")


def triple_from_polys(h1: PolyFp, h2: PolyFp, h3: PolyFp, m: int) -> SigmaTriple:
    return SigmaTriple(cyclic_code(h1, m, "plus"), cyclic_code(h2, m, "minus"), cyclic_code(h3, m, "minus"))


def check_divisors(h1: PolyFp, h2: PolyFp, h3: PolyFp, m: int) -> None:
    """Raise unless h1 | a^m - 1 and h2, h3 | a^m + 1."""
    for name, h, s in (("h1", h1, 1), ("h2", h2, -1), ("h3", h3, -1)):
        mod = PolyFp.x_pow_pm1(m, s, h.p)
        if h.is_zero() or not poly_divmod(mod, h)[1].is_zero():
            raise PreconditionError(f"{name} = {h} does not divide {mod}")


def divisor_triples(p: int, m: int) -> list[tuple[PolyFp, PolyFp, PolyFp]]:
    """All (h1, h2, h3) with h1 | a^m - 1 and h2, h3 | a^m + 1, monic."""
    d1 = divisors_of(PolyFp.x_pow_pm1(m, 1, p))
    d2 = divisors_of(PolyFp.x_pow_pm1(m, -1, p))
    return list(itertools.product(d1, d2, d2))


def triple_generators(t: SigmaTriple, ctx: RingContext) -> list[PolyR]:
    """[sigma_1 h_1, sigma_2 h_2, sigma_3 h_3]."""
    _sigma_gate(ctx, "triple_generators")
    return [PolyR.from_fp(h, ctx, s) for s, h in zip(sigmas(ctx), t.generator_polynomials())]


def single_generator(t: SigmaTriple, ctx: RingContext) -> PolyR:
    """h(a) = sigma_1 h_1 + sigma_2 h_2 + sigma_3 h_3."""
    g = triple_generators(t, ctx)
    return g[0] + g[1] + g[2]


def sigma_combine(polys, ctx: RingContext) -> PolyR:
    s = sigmas(ctx)
    out = PolyR([], ctx)
    for si, f in zip(s, polys):
        out = out + PolyR.from_fp(f, ctx, si)
    return out


def check_polys(t: SigmaTriple) -> tuple[PolyFp, PolyFp, PolyFp]:
    """k_i with h_i k_i = a^m -+ 1."""
    out = []
    for h, s in zip(t.generator_polynomials(), TRIPLE_SIGNS):
        q, r = poly_divmod(PolyFp.x_pow_pm1(t.m, SIGNS[s], t.p), h)
        assert r.is_zero()
        out.append(q)
    return tuple(out)


@dataclass(frozen=True)
class HKCheck:
    h: PolyR
    k: PolyR
    product: PolyR
    target: PolyR

    @property
    def holds(self) -> bool:
        return self.product == self.target


def check_hk_product(t: SigmaTriple, ctx: RingContext) -> HKCheck:
    _sigma_gate(ctx, "check_hk_product")
    h = single_generator(t, ctx)
    k = sigma_combine(check_polys(t), ctx)
    lam = lambda_unit(ctx)
    target = PolyR([-lam] + [ctx.zero()] * (t.m - 1) + [ctx.one()], ctx)
    return HKCheck(h, k, h * k, target)


@dataclass(frozen=True)
class BezoutCertificate:
    u: PolyR
    v: PolyR
    g: PolyR
    k: PolyR
    combination: PolyR

    @property
    def holds(self) -> bool:
        return self.combination == PolyR([self.g.ctx.one()], self.g.ctx)


def bezout_certificate(gs, ks, ctx: RingContext) -> BezoutCertificate:
    """Assemble u g + v k = 1 over R from per-slot Bezout identities over F_p."""
    _sigma_gate(ctx, "bezout_certificate")
    us, vs = [], []
    for g, k in zip(gs, ks):
        d, s, t = poly_gcd_ext(g, k)
        if not d.is_one():
            raise PreconditionError(f"gcd({g}, {k}) = {d} is not 1")
        us.append(s)
        vs.append(t)
    u, v = sigma_combine(us, ctx), sigma_combine(vs, ctx)
    g, k = sigma_combine(gs, ctx), sigma_combine(ks, ctx)
    return BezoutCertificate(u, v, g, k, u * g + v * k)


# -- duals -------------------------------------------------------------------

def dual_fp(code: LinearCodeFp) -> LinearCodeFp:
    return LinearCodeFp(linalg.nullspace(code.basis, code.m, code.p), code.m, code.p, code.unit)


def _inner_product_rows(g, ctx: RingContext) -> np.ndarray:
    return np.hstack([mul_matrix(x) for x in g])


def dual_R(code: ConstaCodeR) -> ConstaCodeR:
    """{x in R^m : x . y = 0 for all y in the code}, Euclidean product over R."""
    ctx, m = code.ctx, code.m
    if code.generators:
        eqs = np.vstack([_inner_product_rows(g, ctx) for g in code.generators])
    else:
        eqs = np.zeros((0, ctx.size * m), dtype=np.int64)
    ns = linalg.nullspace(eqs, ctx.size * m, ctx.p)
    return ConstaCodeR.from_fp_basis(ns, m, ctx, code.unit)


@dataclass(frozen=True)
class DualConstruction:
    generators: tuple   # sigma_i k_i^* as PolyR
    single: PolyR       # sigma_1 k_1^* + sigma_2 k_2^* + sigma_3 k_3^*
    code: ConstaCodeR
    expected_size: int


def dual_via_reciprocal(t: SigmaTriple, ctx: RingContext) -> DualConstruction:
    _sigma_gate(ctx, "dual_via_reciprocal")
    recips = [reciprocal(k) for k in check_polys(t)]
    gens = tuple(PolyR.from_fp(r, ctx, s) for s, r in zip(sigmas(ctx), recips))
    single = gens[0] + gens[1] + gens[2]
    code = ideal_code(list(gens), t.m, ctx, "lambda")
    degs = sum(h.degree for h in t.generator_polynomials())
    return DualConstruction(gens, single, code, t.p**degs)


def inner_product_R(x, y) -> RingElem:
    ctx = x[0].ctx
    acc = ctx.zero()
    for a, b in zip(x, y):
        acc = acc + a * b
    return acc


def is_self_orthogonal(code) -> bool:
    if isinstance(code, LinearCodeFp):
        b = code.basis
        return not ((b @ b.T) % code.p).any()
    gens = code.generators
    for i in range(len(gens)):
        for j in range(i, len(gens)):
            if not inner_product_R(gens[i], gens[j]).is_zero():
                return False
    return True


# -- distances ---------------------------------------------------------------

def min_distance(code, cap: int = DEFAULT_CAP) -> int:
    """Minimum Hamming weight over nonzero codewords (symbol weight for R-codes)."""
    if code.dim == 0:
        raise PreconditionError("zero code has no nonzero codeword")
    if code.size > cap:
        raise CapExceeded(f"code has {code.p}^{code.dim} codewords, cap is {cap}")
    words = code.codewords(cap)
    if isinstance(code, ConstaCodeR):
        w = words.reshape(len(words), code.m, code.ctx.size).any(axis=2).sum(axis=1)
    else:
        w = (words != 0).sum(axis=1)
    return int(w[w > 0].min())


# -- the mu-bar permutation ----------------------------------------------------

def mu_bar(v) -> tuple:
    """Multiply coordinate i by (1 - 2u^k)^i."""
    v = tuple(v)
    if not v:
        return v
    lam = lambda_unit(v[0].ctx)
    return tuple(x * lam**i for i, x in enumerate(v))


def mu_bar_code(code: ConstaCodeR, unit: str | None = None) -> ConstaCodeR:
    if unit is None:
        unit = {"cyclic": "lambda", "lambda": "cyclic"}.get(code.unit, code.unit)
    return ConstaCodeR([mu_bar(g) for g in code.generators], code.m, code.ctx, unit)


# -- code files ----------------------------------------------------------------

def code_to_dict(code) -> dict:
    if isinstance(code, LinearCodeFp):
        gens = [[[int(x)] for x in row] for row in code.basis]
        return {"p": code.p, "k": 0, "m": code.m, "unit": code.unit, "generators": gens}
    gens = [[list(x.coeffs) for x in collapse(row, code.ctx)] for row in code.basis]
    return {"p": code.p, "k": code.ctx.k, "m": code.m, "unit": code.unit, "generators": gens}


def code_from_dict(d: dict):
    try:
        p, k, m, unit, gens = d["p"], d["k"], d["m"], d["unit"], d["generators"]
    except (KeyError, TypeError) as exc:
        raise SchemaError(f"code document missing field: {exc}") from None
    if not all(isinstance(x, int) for x in (p, k, m)) or unit not in UNITS or not isinstance(gens, list):
        raise SchemaError("code document has malformed p/k/m/unit/generators")
    width = k + 1
    for row in gens:
        if not isinstance(row, list) or len(row) != m:
            raise SchemaError(f"each generator must list {m} coordinates")
        for coord in row:
            if not isinstance(coord, list) or len(coord) != width or not all(isinstance(c, int) for c in coord):
                raise SchemaError(f"each coordinate must be a list of {width} integers")
    if k == 0:
        return LinearCodeFp([[c[0] for c in row] for row in gens], m, p, unit)
    return ConstaCodeR(gens, m, RingContext(p, k), unit)


def save_code(code, path) -> None:
    Path(path).write_text(json.dumps(code_to_dict(code)) + "\n", encoding="utf-8")


def load_code(path):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise SchemaError(f"cannot read {path}: {exc.strerror}") from None
    try:
        d = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path} is not valid JSON: {exc}") from None
    return code_from_dict(d)
