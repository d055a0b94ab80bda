import itertools
import json

import numpy as np
import pytest

from constacyclic import linalg
from constacyclic.codes import (
    ConstaCodeR,
    LinearCodeFp,
    SigmaTriple,
    bezout_certificate,
    build_from_triple,
    check_divisors,
    check_hk_product,
    check_polys,
    code_from_dict,
    code_to_dict,
    collapse,
    cyclic_code,
    decompose,
    divisor_triples,
    dual_fp,
    dual_R,
    dual_via_reciprocal,
    expand,
    generator_polynomial,
    ideal_code,
    inner_product_R,
    is_ideal,
    is_invariant,
    is_self_orthogonal,
    load_code,
    min_distance,
    mu_bar,
    mu_bar_code,
    poly_repr,
    poly_to_vector,
    save_code,
    shift,
    single_generator,
    triple_from_polys,
    triple_generators,
    vector_to_poly,
)
from constacyclic.errors import CapExceeded, PreconditionError, SchemaError
from constacyclic.polyring import PolyFp, PolyR, divisors_of, parse_poly, poly_gcd, qr_mul
from constacyclic.ring_r import RingContext, lambda_unit, sigma

C32 = RingContext(3, 2)
C52 = RingContext(5, 2)


def E(ctx, *coeffs):
    return ctx.element(list(coeffs))


def brute_codewords(code: ConstaCodeR) -> set:
    """All R-linear combinations of the generators, by direct enumeration."""
    ctx, m = code.ctx, code.m
    words = {tuple([ctx.zero()] * m)}
    for g in code.generators:
        words = {tuple(w[i] + r * g[i] for i in range(m)) for w in words for r in ctx.elements()}
    return words


def brute_dual(code: ConstaCodeR) -> set:
    ctx, m = code.ctx, code.m
    members = brute_codewords(code)
    out = set()
    for x in itertools.product(list(ctx.elements()), repeat=m):
        if all(inner_product_R(x, y).is_zero() for y in members):
            out.add(x)
    return out


def as_set(code: ConstaCodeR) -> set:
    return {collapse(w, code.ctx) for w in code.codewords()}


# -- shifts ------------------------------------------------------------------------

def test_shift_examples():
    assert shift((1, 2, 3), "alpha") == (3, 1, 2)
    assert shift((1, 2, 3), "beta", 5) == (2, 1, 2)
    assert shift((E(C52, 0, 1, 0),), "gamma") == (E(C52, 0, 4, 0),)


def test_invariance_trivial_codes():
    for kind in ("alpha", "beta", "gamma"):
        assert is_invariant(ConstaCodeR.full(2, C32), kind)
        assert is_invariant(ConstaCodeR.zero(2, C32), kind)


def test_span_u_u2_is_gamma_invariant():
    code = ConstaCodeR([(E(C32, 0, 1, 0),), (E(C32, 0, 0, 1),)], 1, C32)
    assert is_invariant(code, "gamma")
    assert code.size == 9


# -- R-module closure agrees with brute force ------------------------------------------

@pytest.mark.parametrize("seed", range(6))
def test_submodule_matches_brute_force(seed):
    rng = np.random.default_rng(seed)
    gens = [collapse(rng.integers(0, 3, 6), C32) for _ in range(1 + seed % 2)]
    code = ConstaCodeR(gens, 2, C32)
    assert as_set(code) == brute_codewords(code)


def test_poly_roundtrip():
    rng = np.random.default_rng(11)
    for _ in range(100):
        v = collapse(rng.integers(0, 5, 9), C52)
        assert poly_to_vector(vector_to_poly(v, C52), 3) == v


# -- ideals vs gamma-invariance -------------------------------------------------

@pytest.mark.parametrize("m", [1, 2])
def test_gamma_invariance_iff_ideal_on_all_submodules(m):
    # at k = 2 every submodule is a sigma triple, so this is exhaustive
    subs = [LinearCodeFp(b, m, 3) for b in linalg.all_subspaces(m, 3)]
    for t in itertools.product(subs, repeat=3):
        code = build_from_triple(SigmaTriple(*t), C32)
        assert is_invariant(code, "gamma") == is_ideal(code, "lambda")


def test_ideal_code_matches_brute_force():
    h = PolyR([E(C32, 1, 0, 0), E(C32, 0, 1, 0)], C32)
    code = ideal_code([h], 2, C32)
    lam = lambda_unit(C32)
    members = set()
    # every multiple f*h with f of degree < 2
    for f0, f1 in itertools.product(list(C32.elements()), repeat=2):
        members.add(qr_mul(PolyR([f0, f1], C32), h, 2, lam).to_vector(2))
    assert as_set(code) == members


# -- generator polynomials -------------------------------------------------------

def test_generator_polynomial_examples():
    assert generator_polynomial(LinearCodeFp.full(3, 3)).is_one()
    assert generator_polynomial(LinearCodeFp.zero(3, 3)) == parse_poly("a^3-1", 3)
    assert generator_polynomial(LinearCodeFp.zero(3, 3), "minus") == parse_poly("a^3+1", 3)
    code = LinearCodeFp([[1, 1, 1]], 3, 3)
    assert generator_polynomial(code) == parse_poly("a^2+a+1", 3)


@pytest.mark.parametrize("sign,kind", [("plus", "alpha"), ("minus", "beta")])
def test_cyclic_code_roundtrip(sign, kind):
    for m in (1, 2, 3, 4):
        target = PolyFp.x_pow_pm1(m, 1 if sign == "plus" else -1, 3)
        for h in divisors_of(target):
            c = cyclic_code(h, m, sign)
            assert is_invariant(c, kind)
            assert c.dim == m - h.degree
            assert generator_polynomial(c, sign) == h


def test_dual_fp_examples_and_properties():
    assert dual_fp(LinearCodeFp.full(3, 3)) == LinearCodeFp.zero(3, 3)
    assert dual_fp(LinearCodeFp.zero(3, 3)) == LinearCodeFp.full(3, 3)
    assert dual_fp(LinearCodeFp([[1, 1]], 2, 3)) == LinearCodeFp([[1, 2]], 2, 3)
    for m in (1, 2, 3):
        for b in linalg.all_subspaces(m, 3):
            c = LinearCodeFp(b, m, 3)
            if not (is_invariant(c, "alpha") or is_invariant(c, "beta")):
                continue
            d = dual_fp(c)
            assert c.dim + d.dim == m
            assert dual_fp(d) == c


# -- sigma decomposition -----------------------------------------------------------

def test_decompose_examples():
    s1 = sigma(1, C32)
    code = ConstaCodeR([(s1, s1)], 2, C32)
    t = decompose(code)
    assert t.L1 == LinearCodeFp([[1, 1]], 2, 3)
    assert t.L2 == LinearCodeFp.zero(2, 3) and t.L3 == LinearCodeFp.zero(2, 3)
    full = decompose(ConstaCodeR.full(2, C32))
    assert all(c == LinearCodeFp.full(2, 3) for c in full)
    assert all(c.dim == 0 for c in decompose(ConstaCodeR.zero(2, C32)))


def test_decompose_gates():
    with pytest.raises(PreconditionError):
        decompose(ConstaCodeR.zero(1, RingContext(5, 3)))
    t = decompose(ConstaCodeR.zero(1, RingContext(5, 4)))
    assert t.warnings and "sigma2^2" in " ".join(t.warnings)
    with pytest.raises(PreconditionError, match="sigma2"):
        build_from_triple(t, RingContext(5, 4))


def test_build_examples():
    one = LinearCodeFp([[1, 1]], 2, 3)
    zero = LinearCodeFp.zero(2, 3)
    code = build_from_triple(SigmaTriple(one, zero, zero), C32)
    assert code.size == 3 and len(brute_codewords(code)) == 3
    full = LinearCodeFp.full(2, 3)
    assert build_from_triple(SigmaTriple(full, full, full), C32) == ConstaCodeR.full(2, C32)
    assert build_from_triple(SigmaTriple(zero, zero, zero), C32).dim == 0


@pytest.mark.parametrize("p", [3, 5])
@pytest.mark.parametrize("m", [1, 2, 3])
def test_gamma_invariance_iff_component_shifts(p, m):
    ctx = RingContext(p, 2)
    rng = np.random.default_rng([p, m])
    triples = [triple_from_polys(*hs, m) for hs in divisor_triples(p, m)]
    for _ in range(20):
        comps = [LinearCodeFp(rng.integers(0, p, size=(rng.integers(0, m + 1), m)), m, p) for _ in range(3)]
        triples.append(SigmaTriple(*comps))
    for t in triples:
        code = build_from_triple(t, ctx)
        comps_ok = is_invariant(t.L1, "alpha") and is_invariant(t.L2, "beta") and is_invariant(t.L3, "beta")
        assert is_invariant(code, "gamma") == comps_ok
        assert decompose(code) == t


# -- generators, cardinality, h k ---------------------------------------------------

def triples_p3m2():
    return divisor_triples(3, 2)


def test_sixteen_divisor_triples():
    assert len(triples_p3m2()) == 16


@pytest.mark.parametrize("hs", triples_p3m2(), ids=lambda hs: "-".join(map(str, hs)).replace(" ", ""))
def test_cardinality_and_generators(hs):
    t = triple_from_polys(*hs, 2)
    code = build_from_triple(t, C32)
    members = brute_codewords(code)
    assert len(members) == 3 ** (6 - sum(h.degree for h in hs))
    assert as_set(ideal_code(triple_generators(t, C32), 2, C32)) == members
    assert as_set(ideal_code([single_generator(t, C32)], 2, C32)) == members


def test_single_generator_examples():
    one = PolyFp([1], 3)
    t = triple_from_polys(one, one, one, 2)
    assert single_generator(t, C32) == PolyR([C32.one()], C32)
    t0 = triple_from_polys(parse_poly("a^2-1", 3), parse_poly("a^2+1", 3), parse_poly("a^2+1", 3), 2)
    assert ideal_code([single_generator(t0, C32)], 2, C32).dim == 0
    t = triple_from_polys(parse_poly("a-1", 3), parse_poly("a^2+1", 3), one, 2)
    assert ideal_code([single_generator(t, C32)], 2, C32).size == 27


def test_hk_examples():
    one = PolyFp([1], 3)
    lam = lambda_unit(C32)
    target = PolyR([-lam, C32.zero(), C32.one()], C32)
    chk = check_hk_product(triple_from_polys(one, one, one, 2), C32)
    assert chk.k == target and chk.holds
    t = triple_from_polys(parse_poly("a^2-1", 3), parse_poly("a^2+1", 3), parse_poly("a^2+1", 3), 2)
    chk = check_hk_product(t, C32)
    assert chk.h == target and chk.k == PolyR([C32.one()], C32)
    chk = check_hk_product(triple_from_polys(parse_poly("a-1", 3), parse_poly("a^2+1", 3), one, 2), C32)
    assert chk.product == target


@pytest.mark.parametrize("m", [2, 3])
def test_hk_product_all_triples(m):
    for hs in divisor_triples(3, m):
        assert check_hk_product(triple_from_polys(*hs, m), C32).holds


def test_bezout_certificate():
    rng = np.random.default_rng(5)
    for hs in divisor_triples(3, 3):
        ks = check_polys(triple_from_polys(*hs, 3))
        gs = []
        for k in ks:
            while True:
                g = PolyFp(rng.integers(0, 3, 3), 3)
                if not g.is_zero() and poly_gcd(g, k).is_one():
                    break
            gs.append(g)
        assert bezout_certificate(gs, ks, C32).holds


def test_bezout_rejects_common_factor():
    k = parse_poly("a^2-1", 3)
    with pytest.raises(PreconditionError):
        bezout_certificate([parse_poly("a-1", 3)] * 3, [k] * 3, C32)


def test_check_divisors():
    check_divisors(parse_poly("a-1", 3), parse_poly("a^2+1", 3), PolyFp([1], 3), 2)
    with pytest.raises(PreconditionError):
        check_divisors(parse_poly("a+2", 5), PolyFp([1], 5), PolyFp([1], 5), 2)


# -- duals ---------------------------------------------------------------------------

def test_dual_R_trivial():
    assert dual_R(ConstaCodeR.full(2, C32)).dim == 0
    assert dual_R(ConstaCodeR.zero(2, C32)) == ConstaCodeR.full(2, C32)


@pytest.mark.parametrize("hs", triples_p3m2(), ids=lambda hs: "-".join(map(str, hs)).replace(" ", ""))
def test_duals_agree(hs):
    t = triple_from_polys(*hs, 2)
    code = build_from_triple(t, C32)
    d = dual_R(code)
    assert as_set(d) == brute_dual(code)
    dc = dual_via_reciprocal(t, C32)
    assert dc.code == d
    assert d == build_from_triple(t.dual(), C32)
    assert d.size == dc.expected_size == 3 ** sum(h.degree for h in hs)
    assert is_invariant(code, "gamma") and is_invariant(d, "gamma")


def test_dual_via_reciprocal_examples():
    one = PolyFp([1], 3)
    assert dual_via_reciprocal(triple_from_polys(one, one, one, 2), C32).code.dim == 0
    dc = dual_via_reciprocal(triple_from_polys(parse_poly("a-1", 3), one, one, 2), C32)
    assert dc.expected_size == 3 and dc.code.size == 3


# -- distance, orthogonality, mu-bar -------------------------------------------------------

def test_min_distance_examples():
    with pytest.raises(PreconditionError):
        min_distance(LinearCodeFp.zero(3, 3))
    assert min_distance(LinearCodeFp.full(2, 3)) == 1
    assert min_distance(LinearCodeFp([[1, 1, 1]], 3, 3)) == 3
    with pytest.raises(CapExceeded):
        min_distance(LinearCodeFp.full(8, 3), cap=100)


def test_self_orthogonal_examples():
    assert is_self_orthogonal(LinearCodeFp.zero(2, 5))
    assert is_self_orthogonal(LinearCodeFp([[1, 2]], 2, 5))
    assert not is_self_orthogonal(LinearCodeFp.full(1, 5))
    assert not is_self_orthogonal(ConstaCodeR.full(1, C52))


def test_self_orthogonal_R_against_brute_force():
    rng = np.random.default_rng(3)
    for _ in range(30):
        code = ConstaCodeR([collapse(rng.integers(0, 3, 3), C32)], 1, C32)
        members = brute_codewords(code)
        brute = all(inner_product_R(x, y).is_zero() for x in members for y in members)
        assert is_self_orthogonal(code) == brute


def test_mu_bar_examples():
    lam = lambda_unit(C52)
    assert mu_bar((C52.one(), C52.one())) == (C52.one(), lam)
    assert mu_bar((E(C52, 1, 1, 1), E(C52, 0, 0, 0))) == (E(C52, 1, 1, 1), C52.zero())
    assert lam.coeffs == (1, 0, 3)


@pytest.mark.parametrize("m", [1, 3])
def test_mu_bar_maps_cyclic_to_gamma_invariant(m):
    rng = np.random.default_rng(m)
    for _ in range(15):
        w = collapse(rng.integers(0, 3, 3 * m), C32)
        cyc = ideal_code([vector_to_poly(w, C32)], m, C32, "cyclic")
        img = mu_bar_code(cyc)
        assert is_invariant(cyc, "alpha")
        assert is_invariant(img, "gamma")
        assert mu_bar_code(img) == cyc


# -- code files ----------------------------------------------------------------------

def test_code_file_roundtrip(tmp_path):
    t = triple_from_polys(parse_poly("a-1", 3), parse_poly("a^2+1", 3), PolyFp([1], 3), 2)
    code = build_from_triple(t, C32)
    path = tmp_path / "c.json"
    save_code(code, path)
    back = load_code(path)
    assert back == code and back.unit == code.unit
    fp = LinearCodeFp([[1, 2, 0]], 3, 3)
    assert code_from_dict(json.loads(json.dumps(code_to_dict(fp)))) == fp


@pytest.mark.parametrize(
    "doc",
    [{}, {"p": 3, "k": 2, "m": 1, "unit": "lambda", "generators": [[[1, 2]]]},
     {"p": 3, "k": 2, "m": 2, "unit": "weird", "generators": []},
     {"p": 3, "k": 2, "m": 1, "unit": "lambda", "generators": "x"}],
)
def test_code_file_schema_errors(doc):
    with pytest.raises(SchemaError):
        code_from_dict(doc)


def test_load_missing_and_garbage(tmp_path):
    with pytest.raises(SchemaError):
        load_code(tmp_path / "nope.json")
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(SchemaError):
        load_code(bad)


def test_poly_repr_generators():
    code = ConstaCodeR([(E(C32, 0, 1, 0), C32.one())], 2, C32)
    (f,) = poly_repr(code)
    assert f == PolyR([E(C32, 0, 1, 0), C32.one()], C32)
    assert expand(f.to_vector(2), C32).tolist() == [0, 1, 0, 1, 0, 0]
