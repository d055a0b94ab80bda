import itertools

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from constacyclic.errors import ContextMismatch, NotInvertible, ParameterError
from constacyclic.gf_prime import (
    GF,
    P_CAP,
    FpElem,
    check_prime,
    fp_add,
    fp_inv,
    fp_mul,
    fp_neg,
    fp_sub,
    inv_mod,
    is_prime,
    validate_params,
    xgcd,
)


def test_arithmetic_examples():
    assert fp_add(FpElem(4, 5), FpElem(3, 5)).value == 2
    assert fp_mul(FpElem(3, 7), FpElem(5, 7)).value == 1
    for p in (3, 5, 101):
        assert fp_neg(FpElem(0, p)).value == 0
    assert fp_sub(FpElem(1, 5), FpElem(3, 5)).value == 3


def test_inverse_examples():
    assert fp_inv(FpElem(2, 5)).value == 3
    assert fp_inv(FpElem(2, 7)).value == 4
    with pytest.raises(NotInvertible):
        fp_inv(FpElem(0, 5))


@pytest.mark.parametrize("p", [3, 5, 7, 11])
def test_every_nonzero_element_inverts(p):
    for x in range(1, p):
        assert fp_mul(FpElem(x, p), fp_inv(FpElem(x, p))).value == 1


def test_inverse_on_large_prime():
    for x in (1, 2, 50, 100):
        assert (x * inv_mod(x, 101)) % 101 == 1


@pytest.mark.parametrize("p", [3, 5, 7, 11, 101])
def test_field_axioms_on_random_triples(p):
    rng = np.random.default_rng(p)
    f = GF(p)
    for a, b, c in rng.integers(0, p, size=(1000, 3)):
        x, y, z = f(a), f(b), f(c)
        assert (x + y) + z == x + (y + z)
        assert (x * y) * z == x * (y * z)
        assert x * y == y * x and x + y == y + x
        assert x * (y + z) == x * y + x * z


@given(st.integers(-10**6, 10**6), st.integers(-10**6, 10**6))
def test_xgcd_bezout(a, b):
    g, s, t = xgcd(a, b)
    assert s * a + t * b == g


def test_residues_are_canonical():
    assert FpElem(-1, 5).value == 4
    assert FpElem(12, 5) == FpElem(2, 5)
    assert 0 <= (FpElem(3, 7) - 6).value < 7


def test_mixed_moduli_rejected():
    with pytest.raises(ContextMismatch):
        FpElem(1, 5) + FpElem(1, 7)


def test_is_prime_small_range():
    primes = [n for n in range(60) if is_prime(n)]
    assert primes == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]


def test_validate_params_accepts_standing_assumptions():
    v = validate_params(5, 2, 7)
    assert (v.p, v.k, v.m) == (5, 2, 7)


@pytest.mark.parametrize(
    "args, fragment",
    [
        ((2, 2, 7), "2 not invertible"),
        ((9, 2, 3), "p not prime"),
        ((4, 2, 3), "odd"),
        ((5, 0, 3), "k must be"),
        ((5, 2, 0), "m must be"),
    ],
)
def test_validate_params_rejections(args, fragment):
    with pytest.raises(ParameterError, match=fragment):
        validate_params(*args)


def test_distinct_diagnostics():
    msgs = set()
    for args in [(2, 2, 7), (9, 2, 3), (4, 2, 3), (5, 0, 3), (5, 2, 0)]:
        with pytest.raises(ParameterError) as info:
            validate_params(*args)
        msgs.add(str(info.value))
    assert len(msgs) == 5


def test_prime_cap_and_two():
    check_prime(2, allow_two=True)
    with pytest.raises(ParameterError):
        check_prime(2)
    with pytest.raises(ParameterError):
        check_prime(65537)  # prime, above the cap
    assert P_CAP == 2**16


def test_gf_enumerates_elements():
    assert [int(x) for x in GF(5).elements()] == list(range(5))
    assert all(GF(3)(a) * GF(3)(b) == GF(3)(a * b) for a, b in itertools.product(range(3), repeat=2))
