"""Explicit labeling attaining the maximum edge-balanced index.

For n >= 3 the 1-edges of rows u_2..u_n are dealt out over the columns
v_{k+1}..v_m in one continuous wraparound sweep; row u_1 receives the
remaining (m-n+2)/2 1-edges by continuing the same sweep.  Columns
v_1..v_k carry 0-edges only.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .formula import compute_params
from .graph import Instance, Labeling


@dataclass(frozen=True)
class SPlan:
    instance: Instance
    k: int
    assignments: tuple[tuple[int, int], ...]  # (row, column) of each 1-edge, fill order


def _check_sweep_args(instance: Instance, k: int):
    if instance.n < 3:
        raise ValueError(f"the sweep is defined for n >= 3, got {instance}")
    if not 0 <= k < instance.m:
        raise ValueError(f"k={k} out of range for {instance}")


def s_index(instance: Instance, k: int, i: int, pos: int) -> int:
    """Column of the ``pos``-th 1-edge on row ``i`` (2 <= i <= n)."""
    _check_sweep_args(instance, k)
    m, n = instance.m, instance.n
    half = (m + 1) // 2
    if not 2 <= i <= n:
        raise ValueError(f"row {i} out of range 2..{n}")
    if not 1 <= pos <= half:
        raise ValueError(f"position {pos} out of range 1..{half}")
    return ((i - 2) * half + pos - 1) % (m - k) + k + 1


def s1_index(instance: Instance, k: int, pos: int) -> int:
    """Column of the ``pos``-th 1-edge on row 1, continuing the sweep after row n."""
    _check_sweep_args(instance, k)
    m, n = instance.m, instance.n
    extra = (m - n + 2) // 2
    if not 1 <= pos <= extra:
        raise ValueError(f"position {pos} out of range 1..{extra}")
    last = s_index(instance, k, n, (m + 1) // 2)
    # last >= k+1, so the operand is nonnegative
    return (last - k + pos - 1) % (m - k) + k + 1


def s_plan(instance: Instance) -> SPlan:
    m, n = instance.m, instance.n
    k = compute_params(instance).k
    cells = [(i, s_index(instance, k, i, p))
             for i in range(2, n + 1) for p in range(1, (m + 1) // 2 + 1)]
    cells += [(1, s1_index(instance, k, p)) for p in range(1, (m - n + 2) // 2 + 1)]
    if len(set(cells)) != len(cells):
        raise AssertionError(f"sweep for {instance} hit a cell twice")
    return SPlan(instance, k, tuple(cells))


def construct_max(instance: Instance) -> Labeling:
    m, n = instance.m, instance.n
    bits = np.zeros((n, m), dtype=np.uint8)
    if n == 1:
        k = (m - 1) // 2
        bits[0, k:] = 1
        return Labeling(instance, bits)
    for row, col in s_plan(instance).assignments:
        bits[row - 1, col - 1] = 1
    return Labeling(instance, bits)
