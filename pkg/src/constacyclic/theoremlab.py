"""Mechanical checks of the structural claims about (1 - 2u^k)-constacyclic codes.

Every claim has an *evaluator* that decides, for one input (a word, a code,
a triple of generator polynomials, ...), whether the claim is violated. The
check loops feed evaluators from an enumeration (exhaustive where the domain
is small enough, seeded sampling otherwise) and keep the first violation as a
JSON-serializable counterexample. :func:`recheck_counterexample` decodes such
a payload and runs the same evaluator again from the raw inputs.

Claim ids::

    T1.1   gamma-invariance <=> polynomial image is an ideal of R[a]/(a^m - lambda)
    T2.1   Phi o gamma == alpha o Phi               (pointwise)
    T2.2   gamma-invariant L => Phi(L) cyclic
    P2.3   L gamma-invariant <=> dual gamma-invariant
    P2.4   L self-orthogonal => Phi(L) self-orthogonal
    T2.5   gamma(L) == L <=> L1 cyclic, L2 and L3 negacyclic
    T2.6   L == <s1 h1, s2 h2, s3 h3> and |L| = p^(3m - sum deg h_i)
    T2.7   L == <s1 h1 + s2 h2 + s3 h3>, generator unique
    L2.8   g coprime to k => <h g> == <h>
    T2.9a  h k == a^m - lambda in R[a]
    T2.9b  componentwise Bezout data assemble into u g + v k = 1; <h g> == <h>
    T2.10  dual == s1 L1^perp + s2 L2^perp + s3 L3^perp
    C2.11  dual == <s_i k_i^*> == <k^*>, |dual| = p^(sum deg h_i)
    T2.12  mu is a ring isomorphism R[a]/(a^m - 1) -> R[a]/(a^m - lambda), m odd
    C2.13  I ideal <=> mu(I) ideal, m odd
    C2.14  D cyclic <=> mu_bar(D) gamma-invariant, m odd
    P2.16  Phi o mu_bar == rho o Phi                  (pointwise, m odd)
    C2.17  D cyclic => rho(Phi(D)) cyclic, m odd
    C2.18  D cyclic => Phi(D) permutation-equivalent to a cyclic code, m odd
    E2.19  a^7 - 1 = (a - 1)(a^3 + a + 1)(a^3 + a^2 + 1) and its mu-image in R[a]
    NOTE-parity  lambda^m == lambda (m odd), 1 (m even)
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable

import numpy as np

from . import linalg
from .codes import (
    ConstaCodeR,
    LinearCodeFp,
    SigmaTriple,
    bezout_certificate,
    build_from_triple,
    check_hk_product,
    check_polys,
    collapse,
    decompose,
    divisor_triples,
    dual_R,
    dual_via_reciprocal,
    expand,
    ideal_code,
    is_ideal,
    is_invariant,
    is_self_orthogonal,
    mu_bar,
    mu_bar_code,
    shift,
    shift_matrix,
    sigma_combine,
    single_generator,
    triple_from_polys,
    triple_generators,
    vector_to_poly,
)
from .errors import ParameterError, SchemaError
from .gf_prime import check_prime, validate_params
from .graymaps import (
    Permutation,
    gray_image,
    gray_layout,
    gray_map,
    gray_matrix,
    nechaev_rho,
    nechaev_rho_perm,
    permutation_matrix,
    permute_code,
)
from .polyring import PolyFp, PolyR, factor_poly, mu_map, poly_gcd, qr_mul
from .ring_r import RingContext, RingElem, lambda_unit

CLAIMS = (
    "T1.1", "T2.1", "T2.2", "P2.3", "P2.4", "T2.5", "T2.6", "T2.7", "L2.8",
    "T2.9a", "T2.9b", "T2.10", "C2.11", "T2.12", "C2.13", "C2.14", "P2.16",
    "C2.17", "C2.18", "E2.19", "NOTE-parity",
)

HOLDS, FAILS, NA = "holds", "fails", "not-applicable"
EXHAUSTIVE, SAMPLED = "exhaustive", "sampled"

DEFAULT_GRID = tuple((p, 2, m) for p in (3, 5) for m in (1, 2, 3))


@dataclass(frozen=True)
class Caps:
    vectors: int = 50_000       # enumerate all of R^m up to this many words
    samples: int = 200          # random words otherwise (after the F_p basis)
    triples: int = 1_000        # enumerate all subspace triples up to this many
    random_codes: int = 24      # seeded random submodules added to code families
    pairs: int = 20_000         # enumerate all pairs for mu multiplicativity
    pair_samples: int = 1_000
    codewords: int = 20_000     # brute-force span enumeration for cardinalities
    cofactors: int = 6          # random coprime cofactors per triple (L2.8, T2.9b)
    permutations: int = 720     # full permutation search for C2.18 up to (3m)!


@dataclass
class TheoremCheck:
    claim: str
    p: int
    k: int | None
    m: int
    seed: int
    strategy: str
    status: str
    evidence_count: int
    violations: int = 0
    counterexample: dict | None = None
    directions: dict | None = None
    note: str = ""

    def to_dict(self) -> dict:
        d = {
            "claim": self.claim,
            "p": self.p,
            "k": self.k,
            "m": self.m,
            "strategy": self.strategy,
            "status": self.status,
            "evidence_count": self.evidence_count,
            "violations": self.violations,
        }
        if self.directions:
            d["directions"] = self.directions
        if self.note:
            d["note"] = self.note
        if self.counterexample is not None:
            d["counterexample"] = self.counterexample
        return d


# -- serialization -----------------------------------------------------------

def _word(v) -> list:
    return [list(x.coeffs) for x in v]


def _unword(data, ctx: RingContext) -> tuple:
    return tuple(RingElem.from_coeffs(x, ctx) for x in data)


def _code_json(code: ConstaCodeR) -> dict:
    return {"unit": code.unit, "generators": [_word(collapse(r, code.ctx)) for r in code.basis]}


def _uncode(data, ctx: RingContext, m: int) -> ConstaCodeR:
    return ConstaCodeR([_unword(g, ctx) for g in data["generators"]], m, ctx, data.get("unit", "lambda"))


def _polys_json(polys) -> list:
    return [list(f.coeffs) for f in polys]


def _unpolys(data, p: int) -> tuple:
    return tuple(PolyFp(c, p) for c in data)


def _triple_json(t: SigmaTriple) -> list:
    return [[list(map(int, r)) for r in comp.basis] for comp in t]


def _untriple(data, p: int, m: int) -> SigmaTriple:
    return SigmaTriple(*(LinearCodeFp(rows, m, p) for rows in data))


# -- outcomes ----------------------------------------------------------------

@dataclass
class Outcome:
    """Per-direction verdicts for one input: ``applies`` (hypothesis held) and ``violated``."""

    applies: dict
    violated: dict
    detail: dict = field(default_factory=dict)


def _one(applies: bool, violated: bool, **detail) -> Outcome:
    return Outcome({"claim": applies}, {"claim": applies and violated}, detail)


class _Tally:
    def __init__(self, directions=("claim",)):
        self.cases = 0
        self.per = {d: {"cases": 0, "violations": 0} for d in directions}
        self.first = None

    def add(self, out: Outcome, encode: Callable[[], dict]):
        self.cases += 1
        for d, ok in out.applies.items():
            if ok:
                self.per[d]["cases"] += 1
            if out.violated.get(d):
                self.per[d]["violations"] += 1
                if self.first is None:
                    self.first = {"direction": d, "input": encode(), "detail": out.detail}

    @property
    def violations(self) -> int:
        return sum(x["violations"] for x in self.per.values())


def _finish(claim, params, seed, strategy, tally: _Tally, note="", directional=False) -> TheoremCheck:
    p, k, m = params
    status = FAILS if tally.violations else HOLDS
    if not tally.violations and sum(x["cases"] for x in tally.per.values()) == 0:
        status = NA
        note = (note + "; " if note else "") + "hypothesis never satisfied in the enumerated set"
    held = tally.per.get("claim", {}).get("cases")
    if not directional and held is not None and held != tally.cases:
        note = (note + "; " if note else "") + f"hypothesis held in {held} of {tally.cases}"
    ce = None
    if tally.first is not None:
        ce = {"claim": claim, "p": p, "k": k, "m": m, "status": FAILS, **tally.first}
    dirs = None
    if directional:
        dirs = {
            d: {**x, "status": FAILS if x["violations"] else (HOLDS if x["cases"] else NA)}
            for d, x in tally.per.items()
        }
    return TheoremCheck(claim, p, k, m, seed, strategy, status, tally.cases, tally.violations, ce, dirs, note)


def _na(claim, params, seed, reason) -> TheoremCheck:
    p, k, m = params
    return TheoremCheck(claim, p, k, m, seed, EXHAUSTIVE, NA, 0, note=reason)


# -- enumerations --------------------------------------------------------------

def _rng(seed: int, claim: str, ctx_or_p, m: int) -> np.random.Generator:
    p, k = (ctx_or_p.p, ctx_or_p.k) if isinstance(ctx_or_p, RingContext) else (ctx_or_p, 0)
    return np.random.default_rng([seed, CLAIMS.index(claim) if claim in CLAIMS else 99, p, k, m])


def _words(ctx: RingContext, m: int, rng, caps: Caps) -> tuple[np.ndarray, str]:
    """Expanded words, F_p basis vectors first, then everything else (or samples)."""
    n = ctx.size * m
    eye = np.eye(n, dtype=np.int64)
    if ctx.p**n <= caps.vectors:
        rest = linalg.all_vectors(n, ctx.p)
        is_basis = ((rest != 0).sum(axis=1) == 1) & (rest.sum(axis=1) == 1)
        return np.vstack([eye, rest[~is_basis]]), EXHAUSTIVE
    return np.vstack([eye, rng.integers(0, ctx.p, size=(caps.samples, n))]), SAMPLED


def _dedupe(codes):
    seen, out = set(), []
    for c in codes:
        key = c.basis.tobytes() + bytes(c.basis.shape)
        if key not in seen:
            seen.add(key)
            out.append(c)
    return out


def _principal(ctx, m, vec_arr, unit):
    return ideal_code([vector_to_poly(collapse(vec_arr, ctx), ctx)], m, ctx, unit)


def _random_words(ctx, m, rng, count):
    return rng.integers(0, ctx.p, size=(count, ctx.size * m))


@lru_cache(maxsize=64)
def _subspace_triples(p: int, m: int, cap: int):
    n = linalg.count_subspaces(m, p)
    if n**3 > cap:
        return None
    subs = [LinearCodeFp(b, m, p) for b in linalg.all_subspaces(m, p)]
    return tuple(SigmaTriple(a, b, c) for a in subs for b in subs for c in subs)


@lru_cache(maxsize=64)
def _divisor_triples(p: int, m: int):
    return tuple(divisor_triples(p, m))


@lru_cache(maxsize=64)
def _gamma_family(ctx: RingContext, m: int, seed: int, caps: Caps):
    """gamma-invariant codes: principal ideals of basis words, all divisor triples
    (k = 2), seeded random principal ideals."""
    rng = np.random.default_rng([seed, 1001, ctx.p, ctx.k, m])
    codes = [_principal(ctx, m, e, "lambda") for e in np.eye(ctx.size * m, dtype=np.int64)]
    complete = False
    if ctx.k == 2:
        codes += [build_from_triple(triple_from_polys(*hs, m), ctx) for hs in _divisor_triples(ctx.p, m)]
        complete = True
    codes += [_principal(ctx, m, w, "lambda") for w in _random_words(ctx, m, rng, caps.random_codes)]
    return tuple(_dedupe(codes)), complete


@lru_cache(maxsize=64)
def _general_family(ctx: RingContext, m: int, seed: int, caps: Caps):
    """R-submodules of R^m. At k = 2 every submodule is a sigma triple, so the
    subspace-triple enumeration is complete when it fits under the cap."""
    rng = np.random.default_rng([seed, 1002, ctx.p, ctx.k, m])
    if ctx.k == 2:
        triples = _subspace_triples(ctx.p, m, caps.triples)
        if triples is not None:
            return tuple(build_from_triple(t, ctx) for t in triples), True
    codes = [ConstaCodeR([], m, ctx)]
    codes += [_principal(ctx, m, e, "lambda") for e in np.eye(ctx.size * m, dtype=np.int64)]
    if ctx.k == 2:
        codes += [build_from_triple(triple_from_polys(*hs, m), ctx) for hs in _divisor_triples(ctx.p, m)]
    for i in range(caps.random_codes):
        words = _random_words(ctx, m, rng, 1 + i % 2)
        codes.append(ConstaCodeR([collapse(w, ctx) for w in words], m, ctx))
    return tuple(_dedupe(codes)), False


@lru_cache(maxsize=64)
def _cyclic_family(ctx: RingContext, m: int, seed: int, caps: Caps):
    """alpha-invariant codes over R (ideals of R[a]/(a^m - 1))."""
    rng = np.random.default_rng([seed, 1003, ctx.p, ctx.k, m])
    codes = [_principal(ctx, m, e, "cyclic") for e in np.eye(ctx.size * m, dtype=np.int64)]
    complete = False
    if ctx.k == 2:
        divs = sorted({hs[0] for hs in _divisor_triples(ctx.p, m)}, key=PolyFp.sort_key)
        for h1, h2, h3 in itertools.product(divs, repeat=3):
            t = SigmaTriple(*(LinearCodeFp(_cyc_rows(h, m), m, ctx.p) for h in (h1, h2, h3)))
            codes.append(build_from_triple(t, ctx).with_unit("cyclic"))
        complete = True
    codes += [_principal(ctx, m, w, "cyclic") for w in _random_words(ctx, m, rng, caps.random_codes)]
    return tuple(_dedupe(codes)), complete


def _cyc_rows(h: PolyFp, m: int):
    from .codes import cyclic_code

    return cyclic_code(h, m, "plus").basis


# -- pointwise claims ------------------------------------------------------------

def _eval_T2_1(ctx, m, s) -> Outcome:
    lhs = gray_map(shift(s, "gamma"))
    rhs = shift(gray_map(s), "alpha", ctx.p)
    return _one(True, lhs != rhs, lhs=list(lhs), rhs=list(rhs))


def _eval_P2_16(ctx, m, s) -> Outcome:
    lhs = gray_map(mu_bar(s))
    rhs = nechaev_rho(gray_map(s), m)
    return _one(True, lhs != rhs, lhs=list(lhs), rhs=list(rhs))


def _pointwise(claim, ctx, m, seed, caps, lhs_mat, rhs_mat, evaluator, note="") -> TheoremCheck:
    """Batch-evaluate a linear identity on words; the scalar evaluator confirms the
    first violation and produces the counterexample."""
    words, strategy = _words(ctx, m, _rng(seed, claim, ctx, m), caps)
    p = ctx.p
    bad = ((words @ lhs_mat.T) % p != (words @ rhs_mat.T) % p).any(axis=1)
    tally = _Tally()
    tally.cases = len(words)
    tally.per["claim"] = {"cases": len(words), "violations": int(bad.sum())}
    if bad.any():
        s = collapse(words[int(np.argmax(bad))], ctx)
        out = evaluator(ctx, m, s)
        if not out.violated["claim"]:
            raise AssertionError(f"{claim}: batch and scalar evaluation disagree on {_word(s)}")
        tally.first = {"direction": "claim", "input": {"word": _word(s)}, "detail": out.detail}
    return _finish(claim, (p, ctx.k, m), seed, strategy, tally, note)


def _check_T2_1(ctx, m, seed, caps):
    g = gray_matrix(ctx, m)
    lhs = g @ shift_matrix("gamma", m, ctx.p, ctx)
    rhs = shift_matrix("alpha", g.shape[0], ctx.p) @ g
    return _pointwise("T2.1", ctx, m, seed, caps, lhs % ctx.p, rhs % ctx.p, _eval_T2_1)


def _mu_bar_matrix(ctx, m):
    from .ring_r import mul_matrix

    b = ctx.size
    mat = np.zeros((b * m, b * m), dtype=np.int64)
    lam = lambda_unit(ctx)
    for i in range(m):
        mat[i * b:(i + 1) * b, i * b:(i + 1) * b] = mul_matrix(lam**i)
    return mat


def _check_P2_16(ctx, m, seed, caps):
    if m % 2 == 0:
        return _na("P2.16", (ctx.p, ctx.k, m), seed, "stated for odd m only")
    if gray_layout(ctx).n_components != 3:
        return _na("P2.16", (ctx.p, ctx.k, m), seed, "rho acts on F_p^{3m}; Gray image has a different length at this k")
    g = gray_matrix(ctx, m)
    lhs = g @ _mu_bar_matrix(ctx, m)
    rhs = permutation_matrix(nechaev_rho_perm(m)) @ g
    note = "rho = psi on positions 0..2m-1, identity on 2m..3m-1"
    return _pointwise("P2.16", ctx, m, seed, caps, lhs % ctx.p, rhs % ctx.p, _eval_P2_16, note)


def _eval_parity(ctx, m, j) -> Outcome:
    lam = lambda_unit(ctx)
    lhs = lam**j
    rhs = lam if j % 2 else ctx.one()
    return _one(True, lhs != rhs, lhs=list(lhs.coeffs), rhs=list(rhs.coeffs))


def _check_parity(ctx, m, seed, caps):
    tally = _Tally()
    for j in range(1, m + 1):
        tally.add(_eval_parity(ctx, m, j), lambda j=j: {"exponent": j})
    return _finish("NOTE-parity", (ctx.p, ctx.k, m), seed, EXHAUSTIVE, tally, f"exponents 1..{m}")


# -- code-level claims -------------------------------------------------------------

def _eval_T1_1(ctx, m, code) -> Outcome:
    code = code.with_unit("lambda")
    g = is_invariant(code, "gamma")
    i = is_ideal(code, "lambda")
    return Outcome({"forward": g, "reverse": i}, {"forward": g and not i, "reverse": i and not g},
                   {"gamma_invariant": g, "ideal": i})


def _eval_T2_2(ctx, m, code) -> Outcome:
    g = is_invariant(code, "gamma")
    img = gray_image(code)
    cyc = is_invariant(img, "alpha")
    detail = {"gray_image_basis": img.basis.tolist()}
    if g and not cyc:
        shifted = [list(shift(tuple(int(x) for x in r), "alpha", ctx.p)) for r in img.basis]
        detail["shifted_rows_outside"] = [r for r in shifted if not img.contains(r)]
    return _one(g, not cyc, **detail)


def _eval_P2_3(ctx, m, code) -> Outcome:
    d = dual_R(code)
    a, b = is_invariant(code, "gamma"), is_invariant(d, "gamma")
    return Outcome({"forward": a, "reverse": b}, {"forward": a and not b, "reverse": b and not a},
                   {"code_gamma_invariant": a, "dual_gamma_invariant": b})


def _eval_P2_4(ctx, m, code) -> Outcome:
    so = is_self_orthogonal(code)
    img = gray_image(code)
    gram = (img.basis @ img.basis.T) % ctx.p
    detail = {}
    if so and gram.any():
        i, j = map(int, np.argwhere(gram)[0])
        detail = {"phi_x": img.basis[i].tolist(), "phi_y": img.basis[j].tolist(), "inner_product": int(gram[i, j])}
    return _one(so, bool(gram.any()), **detail)


def _eval_T2_5(ctx, m, t: SigmaTriple) -> Outcome:
    code = build_from_triple(t, ctx)
    g = is_invariant(code, "gamma")
    comps = is_invariant(t.L1, "alpha") and is_invariant(t.L2, "beta") and is_invariant(t.L3, "beta")
    rt = decompose(code) == t
    return Outcome(
        {"forward": g, "reverse": comps, "decomposition": True},
        {"forward": g and not comps, "reverse": comps and not g, "decomposition": not rt},
        {"gamma_invariant": g, "components_invariant": comps, "roundtrip": rt},
    )


def _span_closure(rows: np.ndarray, p: int, cap: int) -> int | None:
    """Size of the F_p span by brute-force set closure (no echelon forms)."""
    n = rows.shape[1]
    weights = p ** np.arange(n, dtype=np.int64)
    words = np.zeros((1, n), dtype=np.int64)
    for r in rows:
        grown = np.concatenate([(words + c * r) % p for c in range(p)])
        _, idx = np.unique(grown @ weights, return_index=True)
        words = grown[np.sort(idx)]
        if len(words) > cap:
            return None
    return len(words)


def _eval_T2_6(ctx, m, hs, caps=Caps()) -> Outcome:
    t = triple_from_polys(*hs, m)
    code = build_from_triple(t, ctx)
    ideal = ideal_code(triple_generators(t, ctx), m, ctx, "lambda")
    expected = ctx.p ** (3 * m - sum(h.degree for h in hs))
    # the closure runs over the sigma_i-scaled generators and their u-multiples
    rows = []
    for g in code.generators:
        v = expand(g, ctx)
        for _ in range(ctx.size):
            rows.append(v)
            v = (v.reshape(m, ctx.size) @ _u_t(ctx)).reshape(-1) % ctx.p
    counted = _span_closure(np.array(rows, dtype=np.int64).reshape(-1, ctx.size * m), ctx.p, caps.codewords) if rows else 1
    size = counted if counted is not None else code.size
    ok = size == expected and ideal == code
    return _one(True, not ok, size=size, size_by_enumeration=counted is not None,
                expected_size=expected, ideal_equals_code=ideal == code)


def _u_t(ctx):
    from .ring_r import u_matrix

    return u_matrix(ctx).T


def _eval_T2_7(ctx, m, hs) -> Outcome:
    t = triple_from_polys(*hs, m)
    code = build_from_triple(t, ctx)
    h = single_generator(t, ctx)
    ok = ideal_code([h], m, ctx, "lambda") == code
    return _one(True, not ok, h=h.to_lists())


def _eval_hk(ctx, m, hs) -> Outcome:
    hk = check_hk_product(triple_from_polys(*hs, m), ctx)
    return _one(True, not hk.holds, product=hk.product.to_lists(), target=hk.target.to_lists())


@lru_cache(maxsize=512)
def _triple_info(ctx: RingContext, m: int, hs: tuple):
    """Shared data per divisor triple: (ks, hk-check, h, <h>)."""
    t = triple_from_polys(*hs, m)
    hk = check_hk_product(t, ctx)
    return check_polys(t), hk, hk.h, ideal_code([hk.h], m, ctx, "lambda")


def _eval_L2_8(ctx, m, case) -> Outcome:
    hs, gs = case
    ks, hk, h, ideal_h = _triple_info(ctx, m, tuple(hs))
    coprime = all(poly_gcd(g, k).is_one() for g, k in zip(gs, ks))
    g = sigma_combine(gs, ctx)
    same = ideal_code([h * g], m, ctx, "lambda") == ideal_h
    return _one(coprime and hk.holds, not same, g=g.to_lists())


def _eval_T2_9b(ctx, m, case) -> Outcome:
    hs, gs = case
    ks, _, h, ideal_h = _triple_info(ctx, m, tuple(hs))
    if not all(poly_gcd(g, k).is_one() for g, k in zip(gs, ks)):
        return _one(False, False)
    cert = bezout_certificate(gs, ks, ctx)
    same = ideal_code([h * cert.g], m, ctx, "lambda") == ideal_h
    return _one(True, not (cert.holds and same), bezout=cert.combination.to_lists(), ideal_unchanged=same)


def _eval_T2_10(ctx, m, hs) -> Outcome:
    t = triple_from_polys(*hs, m)
    d = dual_R(build_from_triple(t, ctx))
    ok = d == build_from_triple(t.dual(), ctx)
    return _one(True, not ok)


def _reverse_R(f: PolyR) -> PolyR:
    return PolyR(list(reversed(f.coeffs)), f.ctx)


def _eval_C2_11(ctx, m, hs) -> Outcome:
    t = triple_from_polys(*hs, m)
    brute = dual_R(build_from_triple(t, ctx))
    dc = dual_via_reciprocal(t, ctx)
    single = ideal_code([dc.single], m, ctx, "lambda")
    kpoly = check_hk_product(t, ctx).k
    literal = ideal_code([_reverse_R(kpoly)], m, ctx, "lambda")
    checks = {
        "triple_generators": dc.code == brute,
        "single_generator": single == brute,
        "literal_reversal_of_k": literal == brute,
        "size": brute.size == dc.expected_size,
    }
    return _one(True, not all(checks.values()), **checks, dual_size=brute.size, expected_size=dc.expected_size)


def _eval_C2_13(ctx, m, code) -> Outcome:
    i1 = is_ideal(code, "cyclic")
    polys = [mu_map(vector_to_poly(collapse(r, ctx), ctx)) for r in code.basis]
    image = ConstaCodeR([f.to_vector(m) for f in polys], m, ctx, "lambda")
    i2 = is_ideal(image, "lambda")
    return Outcome({"forward": i1, "reverse": i2}, {"forward": i1 and not i2, "reverse": i2 and not i1},
                   {"ideal_mod_a^m-1": i1, "mu_image_ideal_mod_a^m-lambda": i2})


def _eval_C2_14(ctx, m, code) -> Outcome:
    a = is_invariant(code, "alpha")
    g = is_invariant(mu_bar_code(code, "lambda"), "gamma")
    return Outcome({"forward": a, "reverse": g}, {"forward": a and not g, "reverse": g and not a},
                   {"cyclic": a, "mu_bar_gamma_invariant": g})


def _eval_C2_17(ctx, m, code) -> Outcome:
    cyc = is_invariant(code, "alpha")
    img = permute_code(gray_image(code), nechaev_rho_perm(m))
    return _one(cyc, not is_invariant(img, "alpha"), rho_image_basis=img.basis.tolist())


def _c2_18_candidates(m, caps):
    n = 3 * m
    if math.factorial(n) <= caps.permutations:
        return [Permutation(t) for t in itertools.permutations(range(n))], "all permutations"
    return [Permutation.identity(n), nechaev_rho_perm(m)], "candidates identity and rho only"


def _eval_C2_18(ctx, m, code, caps=Caps()) -> Outcome:
    cyc = is_invariant(code, "alpha")
    img = gray_image(code)
    perms, scope = _c2_18_candidates(m, caps)
    found = any(is_invariant(permute_code(img, w), "alpha") for w in perms)
    return _one(cyc, not found, scope=scope, gray_image_basis=img.basis.tolist())


def _code_check(claim, ctx, m, seed, family, evaluator, directions=("claim",), note=""):
    codes, complete = family
    tally = _Tally(directions)
    for code in codes:
        tally.add(evaluator(ctx, m, code), lambda code=code: {"code": _code_json(code)})
    strategy = EXHAUSTIVE if complete else SAMPLED
    return _finish(claim, (ctx.p, ctx.k, m), seed, strategy, tally, note, directional=len(directions) > 1)


def _needs_k2(claim, ctx, m, seed):
    if ctx.k != 2:
        return _na(claim, (ctx.p, ctx.k, m), seed, f"sigma decomposition is only sound at k = 2 (k = {ctx.k})")
    return None


def _triple_check(claim, ctx, m, seed, evaluator, note=""):
    tally = _Tally()
    for hs in _divisor_triples(ctx.p, m):
        tally.add(evaluator(ctx, m, hs), lambda hs=hs: {"h": _polys_json(hs)})
    return _finish(claim, (ctx.p, ctx.k, m), seed, EXHAUSTIVE, tally, note or "all divisor triples")


def _check_T2_5(ctx, m, seed, caps):
    triples = _subspace_triples(ctx.p, m, caps.triples)
    strategy, note = EXHAUSTIVE, "all triples of F_p-subspaces"
    if triples is None:
        rng = _rng(seed, "T2.5", ctx, m)
        triples = [triple_from_polys(*hs, m) for hs in _divisor_triples(ctx.p, m)]
        for _ in range(caps.random_codes):
            comps = []
            for _ in range(3):
                rows = rng.integers(0, ctx.p, size=(int(rng.integers(0, m + 1)), m))
                comps.append(LinearCodeFp(rows, m, ctx.p))
            triples.append(SigmaTriple(*comps))
        strategy, note = SAMPLED, "all divisor triples plus random subspace triples"
    tally = _Tally(("forward", "reverse", "decomposition"))
    for t in triples:
        tally.add(_eval_T2_5(ctx, m, t), lambda t=t: {"triple": _triple_json(t)})
    return _finish("T2.5", (ctx.p, ctx.k, m), seed, strategy, tally, note, directional=True)


def _check_T2_6(ctx, m, seed, caps):
    return _triple_check("T2.6", ctx, m, seed, lambda c, mm, hs: _eval_T2_6(c, mm, hs, caps))


def _check_T2_7(ctx, m, seed, caps):
    tally = _Tally()
    seen = {}
    for hs in _divisor_triples(ctx.p, m):
        out = _eval_T2_7(ctx, m, hs)
        h = single_generator(triple_from_polys(*hs, m), ctx)
        if h in seen and seen[h] != hs:
            out = _one(True, True, h=h.to_lists(), collides_with=_polys_json(seen[h]))
        seen[h] = hs
        tally.add(out, lambda hs=hs: {"h": _polys_json(hs)})
    return _finish("T2.7", (ctx.p, ctx.k, m), seed, EXHAUSTIVE, tally, "all divisor triples; uniqueness across triples")


def _cofactor_cases(ctx, m, seed, caps, claim):
    rng = _rng(seed, claim, ctx, m)
    cases = []
    for hs in _divisor_triples(ctx.p, m):
        ks = check_polys(triple_from_polys(*hs, m))
        found = 0
        for _ in range(caps.cofactors * 20):
            if found == caps.cofactors:
                break
            gs = []
            for k in ks:
                for _ in range(50):
                    g = PolyFp(rng.integers(0, ctx.p, size=m), ctx.p)
                    if not g.is_zero() and poly_gcd(g, k).is_one():
                        break
                else:
                    g = PolyFp([1], ctx.p)
                gs.append(g)
            cases.append((hs, tuple(gs)))
            found += 1
    return cases


def _cofactor_check(claim, ctx, m, seed, caps, evaluator):
    tally = _Tally()
    for hs, gs in _cofactor_cases(ctx, m, seed, caps, claim):
        tally.add(evaluator(ctx, m, (hs, gs)), lambda hs=hs, gs=gs: {"h": _polys_json(hs), "g": _polys_json(gs)})
    note = f"all divisor triples x {caps.cofactors} random cofactors coprime to k_i"
    return _finish(claim, (ctx.p, ctx.k, m), seed, SAMPLED, tally, note)


def _check_T2_12(ctx, m, seed, caps):
    params = (ctx.p, ctx.k, m)
    if m % 2 == 0:
        return _na("T2.12", params, seed, "stated for odd m only")
    rng = _rng(seed, "T2.12", ctx, m)
    n = ctx.size * m
    lam = lambda_unit(ctx)
    one = ctx.one()
    tally = _Tally(("bijective", "multiplicative"))
    exhaustive = True
    if ctx.p**n <= caps.vectors:
        words = linalg.all_vectors(n, ctx.p)
        images = {}
        for w in words:
            f = vector_to_poly(collapse(w, ctx), ctx)
            img = mu_map(f)
            prev = images.get(img)
            clash = prev is not None
            out = Outcome({"bijective": True}, {"bijective": clash})
            tally.add(out, lambda f=f, prev=prev: {"f": f.to_lists(), "g": prev.to_lists() if prev else None})
            images[img] = f
    else:
        exhaustive = False
        for w in _random_words(ctx, m, rng, caps.samples):
            f = vector_to_poly(collapse(w, ctx), ctx)
            back = mu_map(mu_map(f))
            tally.add(Outcome({"bijective": True}, {"bijective": back != f}), lambda f=f: {"f": f.to_lists()})
    if (ctx.p**n) ** 2 <= caps.pairs:
        words = linalg.all_vectors(n, ctx.p)
        pairs = ((a, b) for a in words for b in words)
    else:
        exhaustive = False
        pairs = zip(_random_words(ctx, m, rng, caps.pair_samples), _random_words(ctx, m, rng, caps.pair_samples))
    for a, b in pairs:
        f, g = vector_to_poly(collapse(a, ctx), ctx), vector_to_poly(collapse(b, ctx), ctx)
        out = _eval_T2_12_pair(ctx, m, (f, g), lam, one)
        tally.add(out, lambda f=f, g=g: {"f": f.to_lists(), "g": g.to_lists()})
    note = "bijectivity by collision search (exhaustive) or mu o mu = id (sampled); multiplicativity on pairs"
    return _finish("T2.12", params, seed, EXHAUSTIVE if exhaustive else SAMPLED, tally, note, directional=True)


def _eval_T2_12_pair(ctx, m, fg, lam=None, one=None) -> Outcome:
    f, g = fg
    lam = lam or lambda_unit(ctx)
    one = one or ctx.one()
    lhs = mu_map(qr_mul(f, g, m, one))
    rhs = qr_mul(mu_map(f), mu_map(g), m, lam)
    return Outcome({"multiplicative": True}, {"multiplicative": lhs != rhs},
                   {"lhs": lhs.to_lists(), "rhs": rhs.to_lists()})


def _odd_only(claim, ctx, m, seed):
    if m % 2 == 0:
        return _na(claim, (ctx.p, ctx.k, m), seed, "stated for odd m only")
    return None


def _mu_family(ctx, m, seed, caps):
    """Candidates for C2.13/C2.14: submodules, cyclic codes, and mu_bar-preimages
    of gamma-invariant codes (so both directions have nonvacuous hypotheses)."""
    gen, gen_complete = _general_family(ctx, m, seed, caps)
    cyc, _ = _cyclic_family(ctx, m, seed, caps)
    gam, _ = _gamma_family(ctx, m, seed, caps)
    codes = [c.with_unit("cyclic") for c in gen] + list(cyc) + [mu_bar_code(c, "cyclic") for c in gam]
    return tuple(_dedupe(codes)), gen_complete


def _check_E2_19(p, k, seed):
    m = 7
    if p == 2:
        fac = factor_poly(PolyFp.x_pow_pm1(7, 1, 2), seed)
        displayed = [PolyFp([1, 1], 2), PolyFp([1, 1, 0, 1], 2), PolyFp([1, 0, 1, 1], 2)]
        tally = _Tally()
        got = sorted(fac.irreducibles(), key=PolyFp.sort_key)
        ok = fac.unit == 1 and all(e == 1 for _, e in fac.factors) and got == sorted(displayed, key=PolyFp.sort_key)
        tally.add(_one(True, not ok, factorization=str(fac)), lambda: {"p": 2})
        return _finish("E2.19", (2, None, m), seed, EXHAUSTIVE, tally, f"over F_2: {fac}")
    ctx = RingContext(p, k)
    tally = _Tally()
    out = _eval_E2_19(ctx)
    tally.add(out, lambda: {"p": p, "k": k})
    fac = factor_poly(PolyFp.x_pow_pm1(7, 1, p), seed)
    return _finish("E2.19", (p, k, m), seed, EXHAUSTIVE, tally, f"a^7 - 1 over F_{p}: {fac}")


def _eval_E2_19(ctx) -> Outcome:
    p = ctx.p
    lam = lambda_unit(ctx)
    z, one = ctx.zero(), ctx.one()
    lhs = PolyR([-lam] + [z] * 6 + [one], ctx)
    f1 = PolyR([-lam, one], ctx)
    f2 = PolyR([lam, one, z, one], ctx)
    f3 = PolyR([lam, z, lam, one], ctx)
    rhs = f1 * f2 * f3
    fp_prod = PolyFp([-1, 1], p) * PolyFp([1, 1, 0, 1], p) * PolyFp([1, 0, 1, 1], p)
    diff = fp_prod - PolyFp.x_pow_pm1(7, 1, p)
    return _one(True, lhs != rhs, lhs=lhs.to_lists(), rhs=rhs.to_lists(), fp_difference=list(diff.coeffs))


# -- registry ----------------------------------------------------------------------

def _family_check(claim, family_fn, evaluator, directions=("claim",), needs_odd=False, needs_k2=False, note=""):
    def run(ctx, m, seed, caps):
        if needs_k2 and (r := _needs_k2(claim, ctx, m, seed)):
            return r
        if needs_odd and (r := _odd_only(claim, ctx, m, seed)):
            return r
        return _code_check(claim, ctx, m, seed, family_fn(ctx, m, seed, caps), evaluator, directions, note)

    return run


def _k2(claim, fn):
    def run(ctx, m, seed, caps):
        return _needs_k2(claim, ctx, m, seed) or fn(ctx, m, seed, caps)

    return run


def _three_components(claim, fn):
    def run(ctx, m, seed, caps):
        if (r := _odd_only(claim, ctx, m, seed)):
            return r
        if gray_layout(ctx).n_components != 3:
            return _na(claim, (ctx.p, ctx.k, m), seed, "rho needs a Gray image of length 3m")
        return fn(ctx, m, seed, caps)

    return run


_FWD_REV = ("forward", "reverse")

_CHECKS = {
    "T1.1": _family_check("T1.1", _general_family, _eval_T1_1, _FWD_REV, note="R-submodules; ideal test by polynomial multiplication"),
    "T2.1": _check_T2_1,
    "T2.2": _family_check("T2.2", _gamma_family, _eval_T2_2, note="gamma-invariant codes"),
    "P2.3": _family_check("P2.3", _general_family, _eval_P2_3, _FWD_REV, note="R-submodules"),
    "P2.4": _family_check("P2.4", _general_family, _eval_P2_4, note="self-orthogonal R-submodules"),
    "T2.5": _k2("T2.5", _check_T2_5),
    "T2.6": _k2("T2.6", _check_T2_6),
    "T2.7": _k2("T2.7", _check_T2_7),
    "L2.8": _k2("L2.8", lambda c, m, s, caps: _cofactor_check("L2.8", c, m, s, caps, _eval_L2_8)),
    "T2.9a": _k2("T2.9a", lambda c, m, s, caps: _triple_check("T2.9a", c, m, s, _eval_hk)),
    "T2.9b": _k2("T2.9b", lambda c, m, s, caps: _cofactor_check("T2.9b", c, m, s, caps, _eval_T2_9b)),
    "T2.10": _k2("T2.10", lambda c, m, s, caps: _triple_check("T2.10", c, m, s, _eval_T2_10)),
    "C2.11": _k2("C2.11", lambda c, m, s, caps: _triple_check("C2.11", c, m, s, _eval_C2_11)),
    "T2.12": _check_T2_12,
    "C2.13": _family_check("C2.13", _mu_family, _eval_C2_13, _FWD_REV, needs_odd=True, note="R-submodules read in R[a]/(a^m - 1)"),
    "C2.14": _family_check("C2.14", _mu_family, _eval_C2_14, _FWD_REV, needs_odd=True, note="R-submodules"),
    "P2.16": _check_P2_16,
    "C2.17": _three_components("C2.17", _family_check("C2.17", _cyclic_family, _eval_C2_17, note="cyclic codes over R")),
    "C2.18": _three_components(
        "C2.18",
        lambda c, m, s, caps: _code_check(
            "C2.18", c, m, s, _cyclic_family(c, m, s, caps),
            lambda cc, mm, code: _eval_C2_18(cc, mm, code, caps),
            note=f"cyclic codes over R; equivalence searched over {_c2_18_candidates(m, caps)[1]}",
        ),
    ),
    "NOTE-parity": _check_parity,
}


def check(claim: str, p: int, k: int | None, m: int, seed: int = 0, caps: Caps | None = None) -> TheoremCheck:
    """Check one claim at one parameter point."""
    caps = caps or Caps()
    if claim not in CLAIMS:
        raise ParameterError(f"unknown claim id {claim!r}")
    if claim == "E2.19":
        if p == 2:
            check_prime(p, allow_two=True)
            return _check_E2_19(2, None, seed)
        validate_params(p, k, 7)
        return _check_E2_19(p, k, seed)
    validate_params(p, k, m)
    return _CHECKS[claim](RingContext(p, k), m, seed, caps)


# -- recheck -----------------------------------------------------------------------

def _decode_code(inp, ctx, m):
    return _uncode(inp["code"], ctx, m)


def _decode_hs(inp, ctx, m):
    return _unpolys(inp["h"], ctx.p)


def _decode_cofactor(inp, ctx, m):
    return _unpolys(inp["h"], ctx.p), _unpolys(inp["g"], ctx.p)


def _decode_word(inp, ctx, m):
    return _unword(inp["word"], ctx)


_RECHECK = {
    "T1.1": (_decode_code, _eval_T1_1),
    "T2.1": (_decode_word, _eval_T2_1),
    "T2.2": (_decode_code, _eval_T2_2),
    "P2.3": (_decode_code, _eval_P2_3),
    "P2.4": (_decode_code, _eval_P2_4),
    "T2.5": (lambda inp, ctx, m: _untriple(inp["triple"], ctx.p, m), _eval_T2_5),
    "T2.6": (_decode_hs, _eval_T2_6),
    "T2.7": (_decode_hs, _eval_T2_7),
    "L2.8": (_decode_cofactor, _eval_L2_8),
    "T2.9a": (_decode_hs, _eval_hk),
    "T2.9b": (_decode_cofactor, _eval_T2_9b),
    "T2.10": (_decode_hs, _eval_T2_10),
    "C2.11": (_decode_hs, _eval_C2_11),
    "C2.13": (_decode_code, _eval_C2_13),
    "C2.14": (_decode_code, _eval_C2_14),
    "P2.16": (_decode_word, _eval_P2_16),
    "C2.17": (_decode_code, _eval_C2_17),
    "C2.18": (_decode_code, _eval_C2_18),
    "NOTE-parity": (lambda inp, ctx, m: int(inp["exponent"]), _eval_parity),
}


def _recheck_T2_12(payload, ctx, m) -> bool:
    inp = payload["input"]
    f = PolyR(inp["f"], ctx)
    if payload["direction"] == "bijective":
        if inp.get("g") is None:
            return mu_map(mu_map(f)) != f
        g = PolyR(inp["g"], ctx)
        return f != g and mu_map(f) == mu_map(g)
    g = PolyR(inp["g"], ctx)
    if f.degree >= m or g.degree >= m:
        return False
    return _eval_T2_12_pair(ctx, m, (f, g)).violated["multiplicative"]


def recheck_counterexample(payload: dict) -> bool:
    """Re-evaluate a stored violation from its raw inputs; True iff still violated."""
    try:
        claim = payload["claim"]
        p, k, m = payload["p"], payload["k"], payload["m"]
        inp = payload["input"]
        direction = payload.get("direction", "claim")
        status = payload["status"]
    except (KeyError, TypeError) as exc:
        raise SchemaError(f"counterexample payload missing field: {exc}") from None
    if status != FAILS:
        raise SchemaError(f"payload has status {status!r}; only failing checks carry counterexamples")
    if claim not in CLAIMS:
        raise SchemaError(f"unknown claim id {claim!r}")
    try:
        if claim == "E2.19":
            if p == 2:
                fac = factor_poly(PolyFp.x_pow_pm1(7, 1, 2))
                displayed = sorted([PolyFp([1, 1], 2), PolyFp([1, 1, 0, 1], 2), PolyFp([1, 0, 1, 1], 2)], key=PolyFp.sort_key)
                return fac.irreducibles() != displayed
            return _eval_E2_19(RingContext(int(inp["p"]), int(inp["k"]))).violated["claim"]
        ctx = RingContext(p, k)
        if claim == "T2.12":
            return _recheck_T2_12(payload, ctx, m)
        decode, evaluator = _RECHECK[claim]
        obj = decode(inp, ctx, m)
        out = evaluator(ctx, m, obj)
    except SchemaError:
        raise
    except (KeyError, TypeError, IndexError) as exc:
        raise SchemaError(f"malformed counterexample input for {claim}: {exc!r}") from None
    except ValueError:
        # tampered data that no longer describes a valid object is not a violation
        return False
    return bool(out.violated.get(direction, False))


# -- suite ---------------------------------------------------------------------

@dataclass
class SuiteReport:
    seed: int
    grid: tuple
    results: list

    def summary(self) -> dict:
        counts = {HOLDS: 0, FAILS: 0, NA: 0}
        for r in self.results:
            counts[r.status] += 1
        return counts

    def to_dict(self) -> dict:
        return {
            "seed": self.seed,
            "grid": [list(g) for g in self.grid],
            "summary": self.summary(),
            "results": [r.to_dict() for r in self.results],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def to_text(self) -> str:
        head = f"{'claim':<12}{'p':>4}{'k':>4}{'m':>4}  {'strategy':<11}{'status':<15}{'cases':>8}{'viol':>7}  note"
        lines = [head, "-" * len(head)]
        for r in self.results:
            k = "-" if r.k is None else str(r.k)
            lines.append(
                f"{r.claim:<12}{r.p:>4}{k:>4}{r.m:>4}  {r.strategy:<11}{r.status:<15}"
                f"{r.evidence_count:>8}{r.violations:>7}  {r.note}"
            )
        s = self.summary()
        lines.append("")
        lines.append(f"{len(self.results)} checks: {s[HOLDS]} holds, {s[FAILS]} fails, {s[NA]} not-applicable")
        return "\n".join(lines) + "\n"


def _row_key(r: TheoremCheck):
    return (CLAIMS.index(r.claim), r.p, -1 if r.k is None else r.k, r.m)


def run_suite(grid=DEFAULT_GRID, seed: int = 0, caps: Caps | None = None, claims=None) -> SuiteReport:
    """Run every requested claim on every grid point; E2.19 runs once per (p, k) at
    m = 7, plus once over F_2."""
    caps = caps or Caps()
    grid = tuple(sorted({tuple(g) for g in grid}))
    claims = CLAIMS if claims is None else tuple(claims)
    for c in claims:
        if c not in CLAIMS:
            raise ParameterError(f"unknown claim id {c!r}")
    results = []
    for claim in claims:
        if claim == "E2.19":
            if not grid:
                continue
            points = sorted({(p, k) for p, k, _ in grid})
            results.append(check("E2.19", 2, None, 7, seed, caps))
            results += [check("E2.19", p, k, 7, seed, caps) for p, k in points]
            continue
        results += [check(claim, p, k, m, seed, caps) for p, k, m in grid]
    results.sort(key=_row_key)
    return SuiteReport(seed, grid, results)
