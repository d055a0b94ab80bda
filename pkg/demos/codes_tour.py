"""
Building codes from generator polynomials
=========================================

Pick one divisor of a^m - 1 and two of a^m + 1, glue them with the
idempotents and look at the resulting code, its dual and its Gray image.
"""

from constacyclic.codes import (
    build_from_triple,
    check_hk_product,
    dual_R,
    is_invariant,
    min_distance,
    single_generator,
    triple_from_polys,
)
from constacyclic.graymaps import gray_image
from constacyclic.polyring import parse_poly
from constacyclic.ring_r import RingContext

p, m = 3, 2
ctx = RingContext(p, 2)
h1, h2, h3 = (parse_poly(s, p) for s in ("a-1", "a^2+1", "1"))

t = triple_from_polys(h1, h2, h3, m)
code = build_from_triple(t, ctx)
print("size", code.size, "= 3^(6 - deg h1 - deg h2 - deg h3)")
print("gamma-invariant:", is_invariant(code, "gamma"))

# the same code from a single generator
h = single_generator(t, ctx)
print("h(a) =", h)
hk = check_hk_product(t, ctx)
print("h(a)k(a) =", hk.product, "| holds:", hk.holds)

# the dual has the complementary size and is again gamma-invariant
d = dual_R(code)
print("dual size", d.size, "| gamma-invariant:", is_invariant(d, "gamma"))

img = gray_image(code)
print("Gray image: length", img.m, "dimension", img.dim, "distance", min_distance(img))
