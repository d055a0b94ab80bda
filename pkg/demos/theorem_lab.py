"""
Checking claims mechanically
============================

Run a few claims on small grids. Failing claims come with a
counterexample that can be re-verified from its raw inputs.
"""

import json

from constacyclic.theoremlab import check, recheck_counterexample, run_suite

# the Gray map does not intertwine the two shifts: a single word suffices
r = check("T2.1", 5, 2, 1)
print(r.status, r.evidence_count, "cases")
print(json.dumps(r.counterexample["detail"]))
print("recheck:", recheck_counterexample(r.counterexample))

# a claim that holds, checked over every divisor triple
r = check("T2.6", 3, 2, 2)
print(r.claim, r.status, r.strategy, r.evidence_count)

# a tiny suite, printed as a table
report = run_suite(grid=[(3, 2, 1), (3, 2, 3)], seed=1, claims=["T2.1", "T2.5", "T2.12", "NOTE-parity"])
print(report.to_text())
