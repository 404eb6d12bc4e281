"""
Maximum index and index sets from the closed form
=================================================

For odd m >= n the whole index set depends only on ``k``, the number of
part-A vertices that are forced to be 0-vertices.
"""

from ebiset import Instance, compute_params, ebi_set

# a small table of parameters
print(f"{'m':>3} {'n':>3} {'k':>3} {'j':>3} {'max':>4}  set")
for m, n in [(1, 1), (7, 1), (3, 3), (5, 3), (9, 3), (5, 5), (21, 5), (99, 5)]:
    inst = Instance(m, n)
    p = compute_params(inst)
    values = ebi_set(inst).values
    shown = values if len(values) < 8 else values[:3] + ("...",) + values[-2:]
    print(f"{m:>3} {n:>3} {p.k:>3} {p.j:>3} {p.max_index:>4}  {shown}")

###############################################################################
# With n = 1 every labeling has index 2, however large m is.

print(ebi_set(Instance(51, 1)).values)
