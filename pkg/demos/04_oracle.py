"""
Checking the closed form by brute force
=======================================

The oracle walks every labeling with (mn+1)/2 1-edges.  Ranges of ranks
are independent, so a run can be split and merged without changing the
report.
"""

import time

from ebiset import EnumerationJob, Instance, run_oracle, run_partitioned, verify_instance

for m, n in [(3, 3), (5, 3), (7, 3), (5, 5), (9, 3)]:
    t0 = time.perf_counter()
    res = verify_instance(Instance(m, n))
    dt = time.perf_counter() - t0
    print(f"K({m},{n}) {'PASS' if res.ok else 'FAIL'} {sorted(res.report.observed)} "
          f"{res.report.enumerated} labelings in {dt:.2f}s")

print(run_oracle(EnumerationJob(Instance(5, 5))).to_text())

###############################################################################
# Splitting into eight ranges gives the same report byte for byte.

assert run_partitioned(Instance(7, 3), 8).to_text() == run_oracle(
    EnumerationJob(Instance(7, 3))).to_text()

###############################################################################
# Past the exhaustive budget only sampling is possible; a sample can show
# that nothing outside the closed form turns up, not that every value does.

res = verify_instance(Instance(11, 9), sample=50_000, seed=7)
print(res.report.to_text(), "expected", res.expected, "ok:", res.ok)
