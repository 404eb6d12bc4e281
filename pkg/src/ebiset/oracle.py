"""Exhaustive and sampled enumeration of edge-friendly labelings.

Labelings with ``(mn+1)/2`` 1-edges are identified with ``(mn+1)/2``-subsets
of the ``mn`` row-major cells, ranked in colexicographic order: the subset
``c_1 < ... < c_t`` has rank ``sum C(c_i, i)``.  In that order consecutive
subsets are consecutive integers of fixed popcount, so a rank range is a
contiguous run of bitmasks that a worker can walk on its own.
"""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb

import numba
import numpy as np

from .errors import BudgetExceeded
from .formula import ebi_set
from .graph import Instance, Labeling, counts

DEFAULT_BUDGET = 22_000_000
BUDGET_ENV = "EBI_ORACLE_BUDGET"


def default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    return int(raw) if raw else DEFAULT_BUDGET


def total_labelings(instance: Instance) -> int:
    return comb(instance.edges, instance.ones)


def unrank_mask(rank: int, cells: int, ones: int) -> int:
    total = comb(cells, ones)
    if not 0 <= rank < total:
        raise ValueError(f"rank {rank} out of range [0, {total})")
    mask = 0
    c = cells
    for i in range(ones, 0, -1):
        c -= 1
        while comb(c, i) > rank:
            c -= 1
        rank -= comb(c, i)
        mask |= 1 << c
    return mask


def rank_mask(mask: int) -> int:
    rank, i, p = 0, 0, 0
    while mask:
        if mask & 1:
            i += 1
            rank += comb(p, i)
        mask >>= 1
        p += 1
    return rank


def unrank(rank: int, instance: Instance) -> Labeling:
    return Labeling.from_mask(instance, unrank_mask(rank, instance.edges, instance.ones))


def rank(labeling: Labeling) -> int:
    return rank_mask(labeling.mask)


@dataclass(frozen=True)
class EnumerationJob:
    """``[lo, hi)`` is a colex rank range; ``hi=None`` means the full range.

    Sampled jobs ignore the range and draw ``sample`` uniform labelings from
    ``numpy.random.default_rng(seed)``.
    """

    instance: Instance
    lo: int = 0
    hi: int | None = None
    mode: str = "exhaustive"
    sample: int = 0
    seed: int | None = None

    def __post_init__(self):
        if self.mode not in ("exhaustive", "sampled"):
            raise ValueError(f"mode must be 'exhaustive' or 'sampled', got {self.mode!r}")
        if self.hi is None:
            object.__setattr__(self, "hi", self.total)
        if not 0 <= self.lo <= self.hi <= self.total:
            raise ValueError(f"range [{self.lo}, {self.hi}) not inside [0, {self.total}]")
        if self.mode == "sampled" and (self.sample <= 0 or self.seed is None):
            raise ValueError("sampled mode needs a positive sample count and an explicit seed")

    @property
    def total(self) -> int:
        return total_labelings(self.instance)

    def split(self, parts: int) -> list["EnumerationJob"]:
        if self.mode != "exhaustive":
            raise ValueError("only exhaustive jobs split by rank range")
        size = self.hi - self.lo
        edges = [self.lo + size * p // parts for p in range(parts + 1)]
        return [EnumerationJob(self.instance, a, b) for a, b in zip(edges, edges[1:])]


@dataclass
class OracleReport:
    instance: Instance
    mode: str
    per_index_count: dict[int, int] = field(default_factory=dict)

    @property
    def observed(self) -> set[int]:
        return set(self.per_index_count)

    @property
    def enumerated(self) -> int:
        return sum(self.per_index_count.values())

    def to_text(self) -> str:
        lines = [f"{self.instance.m} {self.instance.n} {self.mode} {self.enumerated}"]
        lines += [f"index={t} count={self.per_index_count[t]}" for t in sorted(self.per_index_count)]
        return "\n".join(lines) + "\n"


def parse_report(text: str) -> OracleReport:
    lines = text.rstrip("\n").split("\n")
    m, n, mode, enumerated = lines[0].split(" ")
    rep = OracleReport(Instance(int(m), int(n)), mode)
    for line in lines[1:]:
        t, c = line.split(" ")
        rep.per_index_count[int(t.removeprefix("index="))] = int(c.removeprefix("count="))
    if rep.enumerated != int(enumerated):
        raise ValueError(f"header says {enumerated} labelings, lines sum to {rep.enumerated}")
    return rep


def merge_reports(reports) -> OracleReport:
    reports = list(reports)
    if not reports:
        raise ValueError("nothing to merge")
    inst, mode = reports[0].instance, reports[0].mode
    merged: dict[int, int] = {}
    for r in reports:
        if r.instance != inst or r.mode != mode:
            raise ValueError("cannot merge reports of different instances or modes")
        for t, c in r.per_index_count.items():
            merged[t] = merged.get(t, 0) + c
    return OracleReport(inst, mode, dict(sorted(merged.items())))


@numba.njit(cache=True)
def _walk(m, n, mask, count, hist, stream):
    """Visit ``count`` fixed-popcount masks upward from ``mask``.

    Row and column 1-degrees, and the number of 1-vertices, are updated per
    flipped bit instead of being recounted.
    """
    rowdeg = np.zeros(n, np.int64)
    coldeg = np.zeros(m, np.int64)
    for p in range(m * n):
        if (mask >> p) & 1:
            rowdeg[p // m] += 1
            coldeg[p % m] += 1
    row_hi = m // 2 + 1  # a row is a 1-vertex once its 1-degree reaches this
    col_hi = n // 2 + 1
    v1 = 0
    for r in range(n):
        if rowdeg[r] >= row_hi:
            v1 += 1
    for c in range(m):
        if coldeg[c] >= col_hi:
            v1 += 1
    total = m + n
    record = stream.shape[0] > 0
    for t in range(count):
        idx = abs(2 * v1 - total)
        hist[idx] += 1
        if record:
            stream[t] = idx
        if t + 1 == count:
            break
        low = mask & -mask
        ripple = mask + low
        nxt = (((ripple ^ mask) >> 2) // low) | ripple
        diff = mask ^ nxt
        p = 0
        while diff:
            if diff & 1:
                r = p // m
                c = p % m
                if (nxt >> p) & 1:
                    rowdeg[r] += 1
                    if rowdeg[r] == row_hi:
                        v1 += 1
                    coldeg[c] += 1
                    if coldeg[c] == col_hi:
                        v1 += 1
                else:
                    if rowdeg[r] == row_hi:
                        v1 -= 1
                    rowdeg[r] -= 1
                    if coldeg[c] == col_hi:
                        v1 -= 1
                    coldeg[c] -= 1
            diff >>= 1
            p += 1
        mask = nxt


def index_stream(job: EnumerationJob, naive: bool = False) -> np.ndarray:
    """Index of every labeling in the job's range, in rank order."""
    inst = job.instance
    size = job.hi - job.lo
    if naive:
        return np.array([counts(unrank(r, inst)).index for r in range(job.lo, job.hi)],
                        dtype=np.int64)
    out = np.zeros(size, np.int64)
    if size:
        _check_word(inst)
        hist = np.zeros(inst.m + inst.n + 1, np.int64)
        start = unrank_mask(job.lo, inst.edges, inst.ones)
        _walk(inst.m, inst.n, start, size, hist, out)
    return out


def _check_word(inst: Instance):
    if inst.edges > 62:
        raise BudgetExceeded(f"{inst} has {inst.edges} cells; exhaustive walks need at most 62")


def _histogram(job: EnumerationJob) -> dict[int, int]:
    inst = job.instance
    size = job.hi - job.lo
    if size == 0:
        return {}
    _check_word(inst)
    hist = np.zeros(inst.m + inst.n + 1, np.int64)
    start = unrank_mask(job.lo, inst.edges, inst.ones)
    _walk(inst.m, inst.n, start, size, hist, np.zeros(0, np.int64))
    return {int(t): int(c) for t, c in enumerate(hist) if c}


def _sampled(job: EnumerationJob, chunk: int = 20_000) -> dict[int, int]:
    inst = job.instance
    rng = np.random.default_rng(job.seed)
    hist = np.zeros(inst.m + inst.n + 1, np.int64)
    left = job.sample
    while left:
        size = min(chunk, left)
        keys = rng.random((size, inst.edges))
        # the ones smallest keys give a uniform subset of the cells
        picked = np.argpartition(keys, inst.ones - 1, axis=1)[:, :inst.ones]
        bits = np.zeros((size, inst.edges), np.uint8)
        np.put_along_axis(bits, picked, 1, axis=1)
        bits = bits.reshape(size, inst.n, inst.m)
        v1 = ((bits.sum(axis=2) > inst.m // 2).sum(axis=1)
              + (bits.sum(axis=1) > inst.n // 2).sum(axis=1))
        hist += np.bincount(np.abs(2 * v1 - inst.m - inst.n), minlength=hist.size)
        left -= size
    return {int(t): int(c) for t, c in enumerate(hist) if c}


def run_oracle(job: EnumerationJob, budget: int | None = None, naive: bool = False) -> OracleReport:
    if job.mode == "sampled":
        return OracleReport(job.instance, "sampled", dict(sorted(_sampled(job).items())))
    budget = default_budget() if budget is None else budget
    if job.total > budget:
        raise BudgetExceeded(
            f"{job.instance} has {job.total} labelings, over the budget of {budget}; "
            "use sampled mode or raise the budget")
    if naive:
        stream = index_stream(job, naive=True)
        hist = {int(t): int(c) for t, c in zip(*np.unique(stream, return_counts=True))}
    else:
        hist = _histogram(job)
    return OracleReport(job.instance, "exhaustive", dict(sorted(hist.items())))


def run_partitioned(instance: Instance, parts: int, workers: int = 1,
                    budget: int | None = None) -> OracleReport:
    """Split the full range into ``parts`` jobs, run them on ``workers`` processes, and merge."""
    job = EnumerationJob(instance)
    budget = default_budget() if budget is None else budget
    if job.total > budget:
        raise BudgetExceeded(f"{instance} has {job.total} labelings, over the budget of {budget}")
    jobs = job.split(parts)
    if workers <= 1:
        reports = [run_oracle(j, budget) for j in jobs]
    else:
        with ProcessPoolExecutor(workers) as pool:
            reports = list(pool.map(run_oracle, jobs, [budget] * len(jobs)))
    return merge_reports(reports)


@dataclass
class Verification:
    instance: Instance
    report: OracleReport
    expected: tuple[int, ...]
    missing: tuple[int, ...]
    extra: tuple[int, ...]
    witnesses: dict[int, Labeling] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        if self.report.mode == "sampled":
            return not self.extra
        return not self.missing and not self.extra

    def __bool__(self):
        return self.ok


def _find_witness(instance: Instance, target: int) -> Labeling | None:
    job = EnumerationJob(instance)
    block = 1 << 16
    for lo in range(0, job.total, block):
        hi = min(lo + block, job.total)
        hits = np.flatnonzero(index_stream(EnumerationJob(instance, lo, hi)) == target)
        if hits.size:
            return unrank(lo + int(hits[0]), instance)
    return None


def verify_instance(instance: Instance, budget: int | None = None, sample: int = 0,
                    seed: int | None = None, parts: int = 1, workers: int = 1) -> Verification:
    """Compare the oracle's index set with the closed form.

    Exhaustive runs must match exactly; a sampled run passes when it observes
    nothing outside the closed-form set.
    """
    expected = ebi_set(instance).values
    if sample:
        report = run_oracle(EnumerationJob(instance, mode="sampled", sample=sample, seed=seed))
    else:
        report = run_partitioned(instance, parts, workers, budget)
    observed = report.observed
    missing = tuple(sorted(set(expected) - observed))
    extra = tuple(sorted(observed - set(expected)))
    witnesses = {}
    if report.mode == "exhaustive":
        for t in extra:
            witnesses[t] = _find_witness(instance, t)
    return Verification(instance, report, expected, missing, extra, witnesses)
