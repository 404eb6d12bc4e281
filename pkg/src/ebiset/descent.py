"""Lower the edge-balanced index two at a time by swapping edge labels.

Every swap exchanges a 0-edge ``xz`` with a 1-edge ``yz`` sharing the vertex
``z``.  Because ``z`` trades one 1-edge for another its degrees, and so its
label, never change; only ``x`` and ``y`` move.  A phase keeps swapping on
the same 1-vertex ``y`` until it drops to a 0-vertex, which lowers
``v(1) - v(0)`` by exactly 2.

Two kinds of phase exist.  A ``"pair"`` phase feeds every 1-edge taken from
``y`` to one 0-vertex ``x`` with ``deg0(x) > deg1(y)``; the gap
``deg0(x) - deg1(y)`` is constant across the phase, so ``y`` flips while
``x`` is still a 0-vertex.  Such a pair does not always exist, and pair
phases alone cannot always reach index 0 (from the maximal labeling of
K(5,3) they stall at 2).  A ``"relay"`` phase is the fallback: ``y`` hands
its 1-edges to any vertex of its part that keeps its label afterwards.
When no relay works either, a ``"search"`` phase takes the shortest run of
swaps, each keeping the index or lowering it by 2, that ends 2 lower.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import (AssertionBreach, DescentStuck, NoMixedPart,
                     TargetUnreachable)
from .graph import Labeling, counts, format_labeling, parse_labeling, swap_pair, vertex_summaries

STRATEGIES = ("auto", "pair")


@dataclass(frozen=True)
class SwapChoice:
    """One swap.  ``x`` receives the 1-label on ``xz``, ``y`` gives it up on ``yz``.

    ``x`` and ``y`` are 1-based subscripts within ``part``; ``z`` is a
    subscript in the opposite part.  Edges are ``(row, column)`` pairs.
    """

    part: str
    x: int
    y: int
    z: int
    kind: str = "pair"

    @property
    def zero_edge(self) -> tuple[int, int]:
        return (self.z, self.x) if self.part == "A" else (self.x, self.z)

    @property
    def one_edge(self) -> tuple[int, int]:
        return (self.z, self.y) if self.part == "A" else (self.y, self.z)


@dataclass
class DescentTrace:
    start: Labeling
    steps: list[SwapChoice] = field(default_factory=list)
    checkpoints: dict[int, Labeling] = field(default_factory=dict)

    @property
    def final(self) -> Labeling:
        return self.checkpoints[min(self.checkpoints)]


def _part_view(labeling: Labeling, part: str) -> np.ndarray:
    """Bits with one row per vertex of ``part`` and one column per neighbour."""
    return labeling.bits.T if part == "A" else labeling.bits


def _require_descendable(labeling: Labeling):
    if labeling.instance.n < 3:
        raise TargetUnreachable(
            f"EBI({labeling.instance}) = {{2}}; there is nothing to descend to")
    c = counts(labeling)
    if c.v1 <= c.v0:
        raise ValueError(f"descent needs v(1) > v(0), got v(1)={c.v1}, v(0)={c.v0}")


def _common_neighbour(view: np.ndarray, x: int, y: int):
    """Smallest 0-based ``z`` with ``xz`` a 0-edge and ``yz`` a 1-edge, or None."""
    hits = np.flatnonzero((view[x] == 0) & (view[y] == 1))
    return int(hits[0]) if hits.size else None


def _pair(labeling: Labeling):
    """First (part, x, y) with deg0(x) > deg1(y), 0-based, scanning A then B.

    Raises NoMixedPart when no part contains both labels; returns None when
    mixed parts exist but no pair satisfies the inequality.
    """
    s = vertex_summaries(labeling)
    mixed = False
    for part in "AB":
        deg1, deg0, label = s.part(part)
        zeros = np.flatnonzero(~label)
        ones = np.flatnonzero(label)
        if zeros.size == 0 or ones.size == 0:
            continue
        mixed = True
        for x in zeros:
            for y in ones:
                if deg0[x] > deg1[y]:
                    return part, int(x), int(y)
    if not mixed:
        raise NoMixedPart(f"no part of {labeling.instance} holds both a 0- and a 1-vertex")
    return None


def find_swap(labeling: Labeling) -> SwapChoice:
    """First swap of a pair phase on ``labeling``.

    Scans part A before part B, then the 0-vertex ``x`` of smallest
    subscript, the 1-vertex ``y`` of smallest subscript with
    ``deg0(x) > deg1(y)``, and the smallest common neighbour ``z``.
    Raises AssertionBreach when no pair satisfies the inequality.
    """
    _require_descendable(labeling)
    found = _pair(labeling)
    if found is None:
        raise AssertionBreach(
            "no 0-vertex x and 1-vertex y in a common part with deg0(x) > deg1(y)",
            {"labeling": format_labeling(labeling)})
    part, x, y = found
    # deg0(x) + deg1(y) exceeds the part degree, so z exists
    z = _common_neighbour(_part_view(labeling, part), x, y)
    return SwapChoice(part, x + 1, y + 1, z + 1)


def _apply(labeling: Labeling, choice: SwapChoice) -> Labeling:
    before = vertex_summaries(labeling)
    out = swap_pair(labeling, choice.zero_edge, choice.one_edge)
    after = vertex_summaries(out)
    other = "B" if choice.part == "A" else "A"
    if before.part(other)[2][choice.z - 1] != after.part(other)[2][choice.z - 1]:
        raise AssertionBreach(f"label of z changed on {choice}",
                              {"labeling": format_labeling(labeling), "choice": choice})
    old, new = counts(labeling).index, counts(out).index
    if new not in (old, old - 2):
        raise AssertionBreach(f"index went {old} -> {new} on {choice}",
                              {"labeling": format_labeling(labeling), "choice": choice})
    return out


def _pair_phase(labeling: Labeling, part: str, x: int, y: int):
    steps = []
    while True:
        s = vertex_summaries(labeling)
        deg1, deg0, label = s.part(part)
        if not label[y]:
            return labeling, steps
        if not deg0[x] > deg1[y]:
            raise AssertionBreach(
                f"deg0(x)={deg0[x]} <= deg1(y)={deg1[y]} in part {part}",
                {"labeling": format_labeling(labeling), "x": x + 1, "y": y + 1})
        z = _common_neighbour(_part_view(labeling, part), x, y)
        choice = SwapChoice(part, x + 1, y + 1, z + 1, "pair")
        labeling = _apply(labeling, choice)
        steps.append(choice)


def _relay_receiver(labeling: Labeling, part: str, y: int):
    """Smallest (x, z) that can take a 1-edge from ``y`` without ``x`` flipping."""
    deg1, deg0, label = vertex_summaries(labeling).part(part)
    view = _part_view(labeling, part)
    # a 0-vertex stays one while it keeps at least two more 0-edges than 1-edges
    safe = label | (deg0 - deg1 >= 3)
    safe[y] = False
    for x in np.flatnonzero(safe):
        z = _common_neighbour(view, int(x), y)
        if z is not None:
            return int(x), z
    return None


def _relay_phase(labeling: Labeling):
    s = vertex_summaries(labeling)
    candidates = []
    for part in "AB":
        deg1, _, label = s.part(part)
        for y in np.flatnonzero(label):
            candidates.append((int(deg1[y]), part, int(y)))
    for _, part, y in sorted(candidates, key=lambda c: (c[0], c[1], c[2])):
        current, steps = labeling, []
        while vertex_summaries(current).part(part)[2][y]:
            got = _relay_receiver(current, part, y)
            if got is None:
                break
            x, z = got
            choice = SwapChoice(part, x + 1, y + 1, z + 1, "relay")
            current = _apply(current, choice)
            steps.append(choice)
        else:
            return current, steps
    return None


def _moves(bits: np.ndarray, index: int):
    """Swaps on ``bits`` that keep the index or lower it by 2, in scan order.

    Yields ``(choice, new_bits, new_index)``.
    """
    n, m = bits.shape
    total = m + n
    col1 = bits.sum(axis=0, dtype=np.int64)
    row1 = bits.sum(axis=1, dtype=np.int64)
    v1 = int((col1 > n // 2).sum() + (row1 > m // 2).sum())
    for part, view, deg, half in (("A", bits.T, col1, n // 2), ("B", bits, row1, m // 2)):
        size = view.shape[0]
        for x in range(size):
            for y in range(size):
                if x == y:
                    continue
                dv = (int(deg[x] + 1 > half) - int(deg[x] > half)
                      + int(deg[y] - 1 > half) - int(deg[y] > half))
                new_index = abs(2 * (v1 + dv) - total)
                if new_index not in (index, index - 2):
                    continue
                for z in np.flatnonzero((view[x] == 0) & (view[y] == 1)):
                    out = bits.copy()
                    ov = out.T if part == "A" else out
                    ov[x, z], ov[y, z] = 1, 0
                    yield SwapChoice(part, x + 1, y + 1, int(z) + 1, "search"), out, new_index


def _search_phase(labeling: Labeling, max_nodes: int = 20_000):
    """Breadth-first search for the shortest run of swaps that lowers the index by 2."""
    start = counts(labeling).index
    frontier = [(labeling.bits, [])]
    seen = {labeling.bits.tobytes()}
    while frontier and len(seen) < max_nodes:
        nxt = []
        for bits, path in frontier:
            for choice, out, new_index in _moves(bits, start):
                key = out.tobytes()
                if key in seen:
                    continue
                seen.add(key)
                if new_index == start - 2:
                    return path + [choice]
                nxt.append((out, path + [choice]))
        frontier = nxt
    return None





def descend_once(labeling: Labeling, strategy: str = "auto"):
    """Run one phase; return the new labeling (index lowered by 2) and its swaps.

    ``strategy="pair"`` refuses to fall back to a relay phase and raises
    AssertionBreach instead.
    """
    if strategy not in STRATEGIES:
        raise ValueError(f"strategy must be one of {STRATEGIES}, got {strategy!r}")
    _require_descendable(labeling)
    start = counts(labeling).index
    found = _pair(labeling)
    if found is not None:
        out, steps = _pair_phase(labeling, *found)
    elif strategy == "pair":
        raise AssertionBreach(
            "no 0-vertex x and 1-vertex y in a common part with deg0(x) > deg1(y)",
            {"labeling": format_labeling(labeling), "index": start})
    else:
        found = _relay_phase(labeling)
        if found is None:
            path = _search_phase(labeling)
            if path is None:
                raise DescentStuck(f"no run of swaps lowers the index of {labeling!r}")
            out = labeling
            for choice in path:
                out = _apply(out, choice)
            found = out, path
        out, steps = found
    end = counts(out).index
    if end != start - 2:
        raise AssertionBreach(f"phase moved the index {start} -> {end}",
                              {"labeling": format_labeling(labeling)})
    return out, steps


def descend_to(labeling: Labeling, target: int, strategy: str = "auto") -> DescentTrace:
    start = counts(labeling).index
    if labeling.instance.n < 3:
        raise TargetUnreachable(
            f"EBI({labeling.instance}) = {{2}}; descent is not defined for n = 1")
    if target % 2 or target < 0 or target > start:
        raise TargetUnreachable(
            f"target {target} must be even and in [0, {start}] for this labeling")
    trace = DescentTrace(start=labeling, checkpoints={start: labeling})
    current = labeling
    while counts(current).index > target:
        current, steps = descend_once(current, strategy)
        trace.steps.extend(steps)
        trace.checkpoints[counts(current).index] = current
    return trace


def format_trace(trace: DescentTrace) -> str:
    """Start block, then one ``=== index <t> ===`` block per checkpoint, highest first."""
    parts = [format_labeling(trace.start)]
    for t in sorted(trace.checkpoints, reverse=True):
        parts.append(f"=== index {t} ===\n")
        parts.append(format_labeling(trace.checkpoints[t]))
    return "".join(parts)


def parse_trace(text: str) -> DescentTrace:
    """Inverse of :func:`format_trace`; the swap list is not stored and comes back empty."""
    blocks, current, keys = [], [], []
    for line in text.splitlines(keepends=True):
        if line.startswith("=== index ") and line.endswith(" ===\n"):
            blocks.append("".join(current))
            current = []
            keys.append(int(line[len("=== index "):-len(" ===\n")]))
        else:
            current.append(line)
    blocks.append("".join(current))
    start = parse_labeling(blocks[0])
    checkpoints = {}
    for t, block in zip(keys, blocks[1:]):
        lab = parse_labeling(block)
        if counts(lab).index != t:
            raise ValueError(f"block filed under index {t} has index {counts(lab).index}")
        checkpoints[t] = lab
    return DescentTrace(start=start, checkpoints=checkpoints)
