"""
The labeling that attains the maximum
=====================================

Columns v_1..v_k carry no 1-edges at all; the remaining 1-edges are swept
across columns v_{k+1}..v_m with wraparound, first rows u_2..u_n and then
what is left on row u_1.
"""

from ebiset import Instance, counts, construct_max, format_labeling, vertex_summaries

inst = Instance(9, 5)
lab = construct_max(inst)
print(format_labeling(lab))

s = vertex_summaries(lab)
print("column 1-degrees:", s.deg1_a.tolist())
print("column labels:   ", s.label_a.astype(int).tolist())
print("row 1-degrees:   ", s.deg1_b.tolist())
print("row labels:      ", s.label_b.astype(int).tolist())
print(counts(lab))

###############################################################################
# The sweep keeps the busy columns within one of each other.

busy = s.deg1_a[s.deg1_a > 0]
print("spread over busy columns:", busy.max() - busy.min())
