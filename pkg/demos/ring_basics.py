"""
The ring F_p[u]/(u^(k+1) - u)
=============================

Idempotents, the unit lambda and what changes once k grows past 2.
"""

from constacyclic.ring_r import RingContext, idempotent_report, lambda_unit, sigmas

# start with p = 5, k = 2, where everything behaves
ctx = RingContext(5, 2)
lam = lambda_unit(ctx)
s1, s2, s3 = sigmas(ctx)
print("lambda =", lam)
print("sigmas =", s1, "|", s2, "|", s3)
print("lambda^2 == 1:", lam * lam == ctx.one())

# the sigmas split R into three copies of F_5
for s in (s1, s2, s3):
    print(f"{str(s):>12}  squared  {s * s}")

# at k = 3 the sums and eigen-identities survive, idempotency does not
rep = idempotent_report(RingContext(5, 3))
for name, ok in rep.verdicts.items():
    print(f"  {name:<30}{ok}")
print("sigma2^2 at k = 3:", rep.squares[1])
