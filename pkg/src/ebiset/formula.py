"""Closed forms for the maximum index and the full edge-balanced index set."""
from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Instance, Labeling, counts


@dataclass(frozen=True)
class EbiParams:
    instance: Instance
    k: int  # forced 0-vertices in part A
    j: int  # forced 0-vertices in part B
    max_index: int


def _ceil_div(a: int, b: int) -> int:
    return (a + b - 1) // b


def compute_params(instance: Instance) -> EbiParams:
    m, n = instance.m, instance.n
    k = _ceil_div(m - 1, n + 1)
    j = _ceil_div(n - 1, m + 1)
    max_index = 2 if n == 1 else m + n - 2 * k - 2
    return EbiParams(instance, k, j, max_index)


@dataclass(frozen=True)
class IndexSet:
    """Sorted achievable indices, optionally with a witness labeling per value."""

    instance: Instance
    values: tuple[int, ...]
    witnesses: dict[int, Labeling] = field(default_factory=dict, compare=False)

    def __post_init__(self):
        for t, w in self.witnesses.items():
            if t not in self.values:
                raise ValueError(f"witness for {t} which is not in {self.values}")
            got = counts(w).index
            if got != t:
                raise ValueError(f"witness filed under {t} has index {got}")

    def __contains__(self, t):
        return t in self.values

    def __iter__(self):
        return iter(self.values)


def ebi_set(instance: Instance) -> IndexSet:
    p = compute_params(instance)
    if instance.n == 1:
        return IndexSet(instance, (2,))
    return IndexSet(instance, tuple(range(0, p.max_index + 1, 2)))
