"""
Walking the index down to zero
==============================

Each phase swaps a 0-edge xz with a 1-edge yz until the 1-vertex y flips.
Pair phases send everything to one 0-vertex x with deg0(x) > deg1(y).
When no such pair is left the descent falls back to relay phases, and as a
last resort to a short breadth-first search.
"""

from collections import Counter

from ebiset import Instance, construct_max, counts, descend_once, descend_to, format_trace
from ebiset.errors import AssertionBreach

trace = descend_to(construct_max(Instance(5, 3)), 0)
print(format_trace(trace))
for step in trace.steps:
    print(step.kind, step.part, "x =", step.x, "y =", step.y, "z =", step.z)

###############################################################################
# Pair phases on their own stall at index 2 for K(5,3).

lab, _ = descend_once(construct_max(Instance(5, 3)), strategy="pair")
try:
    descend_once(lab, strategy="pair")
except AssertionBreach as e:
    print("stalled at index", counts(lab).index, "-", e)

###############################################################################
# On a larger instance almost every phase is a pair phase.

big = descend_to(construct_max(Instance(99, 5)), 0)
print(sorted(big.checkpoints, reverse=True)[:5], "...")
print(Counter(s.kind for s in big.steps))
