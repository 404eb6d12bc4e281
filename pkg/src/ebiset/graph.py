"""Edge-friendly labelings of K(m, n) and the vertex labels they induce.

Rows are the vertices u_1..u_n of part B, columns the vertices v_1..v_m of
part A.  All external addresses are 1-based ``(row, column)`` pairs.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .errors import InvalidInstance, LabelingError, SwapError


@dataclass(frozen=True)
class Instance:
    m: int
    n: int

    def __post_init__(self):
        m, n = self.m, self.n
        if not (isinstance(m, (int, np.integer)) and isinstance(n, (int, np.integer))):
            raise InvalidInstance(f"part sizes must be integers, got {m!r}, {n!r}")
        if m < 1 or n < 1:
            raise InvalidInstance(f"part sizes must be positive, got m={m}, n={n}")
        if m % 2 == 0 or n % 2 == 0:
            raise InvalidInstance(f"part sizes must be odd, got m={m}, n={n}")
        if m < n:
            raise InvalidInstance(f"need m >= n, got m={m}, n={n}")
        object.__setattr__(self, "m", int(m))
        object.__setattr__(self, "n", int(n))

    @property
    def edges(self) -> int:
        return self.m * self.n

    @property
    def ones(self) -> int:
        """Number of 1-edges in the canonical orientation."""
        return (self.m * self.n + 1) // 2

    def __str__(self):
        return f"K({self.m},{self.n})"


class Labeling:
    """Immutable 0/1 labeling of the edges of K(m, n).

    ``bits`` is an ``(n, m)`` uint8 array; ``bits[i-1, i'-1]`` is the label of
    edge u_i v_i'.  Exactly ``(mn+1)/2`` entries are 1.
    """

    __slots__ = ("instance", "bits", "_key")

    def __init__(self, instance: Instance, bits):
        arr = np.array(bits, dtype=np.uint8, copy=True)
        if arr.shape != (instance.n, instance.m):
            raise LabelingError(
                f"bit matrix has shape {arr.shape}, expected {(instance.n, instance.m)}")
        if arr.size and arr.max() > 1:
            raise LabelingError("bits must be 0 or 1")
        ones = int(arr.sum())
        if ones != instance.ones:
            raise LabelingError(
                f"{instance} needs exactly {instance.ones} 1-edges, got {ones}")
        arr.setflags(write=False)
        object.__setattr__(self, "instance", instance)
        object.__setattr__(self, "bits", arr)
        object.__setattr__(self, "_key", (instance.m, instance.n, arr.tobytes()))

    def __setattr__(self, name, value):
        raise AttributeError("Labeling is immutable")

    def __eq__(self, other):
        if not isinstance(other, Labeling):
            return NotImplemented
        return self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        rows = ",".join("".join(map(str, r)) for r in self.bits)
        return f"Labeling({self.instance}, {rows})"

    def bit(self, row: int, col: int) -> int:
        _check_cell(self.instance, (row, col))
        return int(self.bits[row - 1, col - 1])

    @property
    def mask(self) -> int:
        """Row-major bitmask: cell (i, i') is bit ``(i-1)*m + (i'-1)``."""
        flat = self.bits.ravel()
        return sum(1 << int(p) for p in np.flatnonzero(flat))

    @classmethod
    def from_mask(cls, instance: Instance, mask: int) -> "Labeling":
        cells = instance.edges
        if mask < 0 or mask >> cells:
            raise LabelingError(f"mask has bits outside the {cells} cells")
        flat = np.array([(mask >> p) & 1 for p in range(cells)], dtype=np.uint8)
        return cls(instance, flat.reshape(instance.n, instance.m))

    def one_edges(self) -> set[tuple[int, int]]:
        rows, cols = np.nonzero(self.bits)
        return {(int(r) + 1, int(c) + 1) for r, c in zip(rows, cols)}


def _check_cell(instance: Instance, cell) -> tuple[int, int]:
    try:
        row, col = cell
    except (TypeError, ValueError):
        raise LabelingError(f"edge must be a (row, column) pair, got {cell!r}") from None
    if not (1 <= row <= instance.n and 1 <= col <= instance.m):
        raise LabelingError(
            f"edge ({row}, {col}) out of range for {instance}: "
            f"rows 1..{instance.n}, columns 1..{instance.m}")
    return int(row), int(col)


def new_labeling(instance: Instance, one_edges: Iterable[tuple[int, int]]) -> Labeling:
    """Build a labeling whose 1-edges are exactly ``one_edges``."""
    cells = {_check_cell(instance, e) for e in one_edges}
    bits = np.zeros((instance.n, instance.m), dtype=np.uint8)
    for row, col in cells:
        bits[row - 1, col - 1] = 1
    return Labeling(instance, bits)


@dataclass(frozen=True, eq=False)
class VertexSummary:
    """Degrees and induced labels.  ``*_a`` arrays are indexed by column
    (part A, length m), ``*_b`` arrays by row (part B, length n)."""

    deg1_a: np.ndarray
    deg0_a: np.ndarray
    label_a: np.ndarray
    deg1_b: np.ndarray
    deg0_b: np.ndarray
    label_b: np.ndarray

    def __eq__(self, other):
        if not isinstance(other, VertexSummary):
            return NotImplemented
        return all(np.array_equal(getattr(self, f), getattr(other, f))
                   for f in ("deg1_a", "deg0_a", "label_a", "deg1_b", "deg0_b", "label_b"))

    def part(self, name: str):
        """Return ``(deg1, deg0, label)`` for part ``"A"`` or ``"B"``."""
        if name == "A":
            return self.deg1_a, self.deg0_a, self.label_a
        if name == "B":
            return self.deg1_b, self.deg0_b, self.label_b
        raise ValueError(f"part must be 'A' or 'B', got {name!r}")


def _frozen(a, dtype=np.int64):
    a = np.asarray(a, dtype=dtype)
    a.setflags(write=False)
    return a


def vertex_summaries(labeling: Labeling) -> VertexSummary:
    bits = labeling.bits
    n, m = bits.shape
    deg1_a = bits.sum(axis=0, dtype=np.int64)
    deg1_b = bits.sum(axis=1, dtype=np.int64)
    deg0_a = n - deg1_a
    deg0_b = m - deg1_b
    # odd degrees rule out ties
    return VertexSummary(
        _frozen(deg1_a), _frozen(deg0_a), _frozen(deg1_a > deg0_a, bool),
        _frozen(deg1_b), _frozen(deg0_b), _frozen(deg1_b > deg0_b, bool),
    )


@dataclass(frozen=True)
class Counts:
    e0: int
    e1: int
    v0: int
    v1: int

    @property
    def index(self) -> int:
        return abs(self.v1 - self.v0)


def counts(labeling: Labeling) -> Counts:
    s = vertex_summaries(labeling)
    e1 = int(labeling.bits.sum())
    v1 = int(s.label_a.sum() + s.label_b.sum())
    inst = labeling.instance
    return Counts(e0=inst.edges - e1, e1=e1, v0=inst.m + inst.n - v1, v1=v1)


def swap_pair(labeling: Labeling, zero_edge, one_edge) -> Labeling:
    """Exchange the labels of a 0-edge and a 1-edge."""
    inst = labeling.instance
    zr, zc = _check_cell(inst, zero_edge)
    orow, ocol = _check_cell(inst, one_edge)
    if labeling.bits[zr - 1, zc - 1] != 0:
        raise SwapError(f"edge ({zr}, {zc}) is a 1-edge, expected a 0-edge")
    if labeling.bits[orow - 1, ocol - 1] != 1:
        raise SwapError(f"edge ({orow}, {ocol}) is a 0-edge, expected a 1-edge")
    bits = labeling.bits.copy()
    bits[zr - 1, zc - 1] = 1
    bits[orow - 1, ocol - 1] = 0
    return Labeling(inst, bits)


def format_labeling(labeling: Labeling) -> str:
    inst = labeling.instance
    lines = [f"{inst.m} {inst.n}"]
    lines += ["".join("1" if b else "0" for b in row) for row in labeling.bits]
    return "\n".join(lines) + "\n"


def parse_labeling(text: str) -> Labeling:
    """Inverse of :func:`format_labeling`.  The input must match it byte for byte."""
    if not text.endswith("\n"):
        raise LabelingError("labeling text must end with a newline")
    lines = text[:-1].split("\n")
    header = lines[0].split(" ")
    if len(header) != 2 or not all(h.isdigit() and h == str(int(h)) for h in header):
        raise LabelingError(f"bad header line {lines[0]!r}")
    inst = Instance(int(header[0]), int(header[1]))
    rows = lines[1:]
    if len(rows) != inst.n:
        raise LabelingError(f"expected {inst.n} rows, got {len(rows)}")
    for r in rows:
        if len(r) != inst.m or set(r) - {"0", "1"}:
            raise LabelingError(f"bad row {r!r}: need exactly {inst.m} characters from 01")
    bits = np.array([[c == "1" for c in r] for r in rows], dtype=np.uint8)
    return Labeling(inst, bits.reshape(inst.n, inst.m))
