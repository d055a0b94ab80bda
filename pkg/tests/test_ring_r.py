import itertools

import numpy as np
import pytest
from conftest import random_elem, sympy_ring_mul

from constacyclic.errors import ContextMismatch, PreconditionError
from constacyclic.ring_r import (
    RingContext,
    RingElem,
    idempotent_report,
    lambda_unit,
    mul_matrix,
    ring_add,
    ring_eval,
    ring_mul,
    ring_neg,
    sigma,
    sigmas,
)

GRID = [(p, k) for p in (3, 5, 7, 11) for k in range(2, 7)]


def el(coeffs, p, k):
    return RingElem.from_coeffs(coeffs, RingContext(p, k))


def test_addition_examples():
    assert ring_add(el([1, 1, 0], 5, 2), el([1, -1, 0], 5, 2)) == el([2, 0, 0], 5, 2)
    x = el([3, 1, 4], 5, 2)
    assert x + RingContext(5, 2).zero() == x
    assert ring_neg(el([1, 0, -1], 3, 2)) == el([2, 0, 1], 3, 2)


def test_multiplication_examples():
    ctx = RingContext(5, 2)
    assert ring_mul(ctx.u_power(1), ctx.u_power(2)) == ctx.u_power(1)
    assert ring_mul(el([1, 1, 0], 5, 2), el([1, -1, 0], 5, 2)) == el([1, 0, -1], 5, 2)


@pytest.mark.parametrize("p,k", GRID)
def test_mul_matches_sympy(p, k):
    ctx = RingContext(p, k)
    rng = np.random.default_rng([p, k])
    for _ in range(40):
        x, y = random_elem(rng, ctx), random_elem(rng, ctx)
        assert list(ring_mul(x, y).coeffs) == sympy_ring_mul(x, y)


def test_lambda_examples():
    assert lambda_unit(RingContext(5, 2)).coeffs == (1, 0, 3)
    assert lambda_unit(RingContext(3, 2)).coeffs == (1, 0, 1)
    lam = lambda_unit(RingContext(7, 4))
    assert sympy_ring_mul(lam, lam) == [1, 0, 0, 0, 0]


def test_sigma_examples():
    assert sigma(1, RingContext(5, 2)).coeffs == (1, 0, 4)
    assert sigma(2, RingContext(5, 2)).coeffs == (0, 3, 3)
    assert sigma(3, RingContext(7, 2)).coeffs == (0, 3, 4)


def test_sigma_rejects_k1():
    ctx = RingContext(5, 1)
    assert sigma(1, ctx) == ctx.one() - ctx.u_power(1)
    with pytest.raises(PreconditionError):
        sigma(2, ctx)


@pytest.mark.parametrize("p,k", GRID)
def test_u_power_reduction(p, k):
    ctx = RingContext(p, k)
    assert ctx.u_power(1) * ctx.u_power(k) == ctx.u_power(1)
    assert ctx.u_power(k + 1) == ctx.u_power(1)
    for e in range(1, 3 * k + 2):
        assert ctx.reduce_exponent(e) == (e - 1) % k + 1


@pytest.mark.parametrize("p,k", GRID)
def test_identities_valid_for_every_k(p, k):
    ctx = RingContext(p, k)
    lam = lambda_unit(ctx)
    s1, s2, s3 = sigmas(ctx)
    assert lam * lam == ctx.one()
    assert s1 + s2 + s3 == ctx.one()
    assert lam * s1 == s1
    assert lam * s2 == -s2
    assert lam * s3 == -s3


@pytest.mark.parametrize("p", [3, 5, 7, 11])
def test_idempotents_at_k2(p):
    ctx = RingContext(p, 2)
    s = sigmas(ctx)
    for i, j in itertools.product(range(3), repeat=2):
        assert s[i] * s[j] == (s[i] if i == j else ctx.zero())
    assert idempotent_report(ctx).all_hold()


@pytest.mark.parametrize("k", [3, 4, 5, 6])
def test_sigma2_square_formula_for_larger_k(k):
    ctx = RingContext(5, k)
    s2 = sigma(2, ctx)
    quarter = pow(4, -1, 5)
    expected = [0] * ctx.size
    for e, c in ((k - 2, 1), (k - 1, 2), (k, 1)):
        expected[e] = (expected[e] + quarter * c) % 5
    assert list((s2 * s2).coeffs) == expected
    assert s2 * s2 != s2
    rep = idempotent_report(ctx)
    assert rep.verdicts["sigma2^2 = sigma2"] is False
    assert rep.squares[1] == s2 * s2


def test_report_is_recomputable():
    rep = idempotent_report(RingContext(5, 3))
    assert rep.verdicts["lambda^2 = 1"] == (rep.lambda_square == RingContext(5, 3).one())
    assert rep.verdicts["sigma1 + sigma2 + sigma3 = 1"] == (rep.total == RingContext(5, 3).one())


@pytest.mark.parametrize("p,k", [(3, 2), (5, 3), (7, 4)])
def test_parity_of_lambda_powers(p, k):
    ctx = RingContext(p, k)
    lam = lambda_unit(ctx)
    for m in range(1, 11):
        assert lam**m == (lam if m % 2 else ctx.one())


def test_ring_eval_examples():
    ctx = RingContext(5, 2)
    assert ring_eval(sigma(1, ctx), 0) == 1
    assert ring_eval(lambda_unit(ctx), 1) == 4
    assert ring_eval(sigma(3, ctx), -1) == 1
    with pytest.raises(PreconditionError):
        ring_eval(ctx.one(), 2)


@pytest.mark.parametrize("p", [3, 5, 7])
def test_evaluation_is_crt_at_k2(p):
    ctx = RingContext(p, 2)
    seen = set()
    for x in ctx.elements():
        for y in (ctx.u_power(1), lambda_unit(ctx)):
            for c in (0, 1, p - 1):
                assert ring_eval(x * y, c) == ring_eval(x, c) * ring_eval(y, c) % p
        seen.add(tuple(ring_eval(x, c) for c in (0, 1, p - 1)))
    assert len(seen) == p**3
    for i, s in enumerate(sigmas(ctx)):
        assert [ring_eval(s, c) for c in (0, 1, p - 1)] == [int(j == i) for j in range(3)]


@pytest.mark.parametrize("p,k", [(3, 2), (5, 3), (7, 5)])
def test_ring_axioms_on_random_triples(p, k):
    ctx = RingContext(p, k)
    rng = np.random.default_rng([p, k, 1])
    for _ in range(1000):
        x, y, z = (random_elem(rng, ctx) for _ in range(3))
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
        assert x * y == y * x


def test_mul_matrix_represents_multiplication():
    ctx = RingContext(5, 3)
    rng = np.random.default_rng(7)
    for _ in range(20):
        x, y = random_elem(rng, ctx), random_elem(rng, ctx)
        assert tuple(mul_matrix(x) @ np.array(y.coeffs) % 5) == (x * y).coeffs


def test_context_mismatch():
    with pytest.raises(ContextMismatch):
        RingContext(5, 2).one() + RingContext(5, 3).one()
    with pytest.raises(ContextMismatch):
        RingContext(5, 2).one() * RingContext(7, 2).one()


def test_str_form():
    assert str(el([1, 0, 3], 5, 2)) == "1 + 3u^2"
    assert str(RingContext(5, 2).zero()) == "0"
