import numpy as np
import pytest
import sympy
from hypothesis import settings

from constacyclic.polyring import PolyFp
from constacyclic.ring_r import RingContext, RingElem

settings.register_profile("lab", max_examples=60, deadline=None, derandomize=True)
settings.load_profile("lab")

U, A = sympy.symbols("u a")


def sympy_ring_mul(x: RingElem, y: RingElem) -> list[int]:
    """Independent product in F_p[u]/(u^(k+1) - u) via sympy remainders."""
    p, k = x.ctx.p, x.ctx.k
    fx = sympy.Poly(list(reversed(x.coeffs)), U, modulus=p)
    fy = sympy.Poly(list(reversed(y.coeffs)), U, modulus=p)
    r = (fx * fy).rem(sympy.Poly(U ** (k + 1) - U, U, modulus=p))
    coeffs = [int(c) % p for c in reversed(r.all_coeffs())]
    return coeffs + [0] * (k + 1 - len(coeffs))


def sympy_poly(f: PolyFp) -> sympy.Poly:
    return sympy.Poly(list(reversed(f.coeffs)) or [0], A, modulus=f.p)


def from_sympy(g: sympy.Poly, p: int) -> PolyFp:
    return PolyFp([int(c) % p for c in reversed(g.all_coeffs())], p)


@pytest.fixture
def rng():
    return np.random.default_rng(20240607)


def random_elem(rng, ctx: RingContext) -> RingElem:
    return RingElem.from_coeffs(rng.integers(0, ctx.p, size=ctx.size), ctx)


# -- acceptance reporting ------------------------------------------------------------

_CRITERIA: dict[int, str] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion number and title")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or rep.when not in ("setup", "call"):
        return
    n, title = mark.args
    if rep.failed or (rep.when == "call" and n not in _CRITERIA):
        verdict = "FAIL" if rep.failed else "PASS"
        _CRITERIA[n] = f"{verdict} criterion {n:>2}: {title}"


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        terminalreporter.write_line(_CRITERIA[n])
