"""Vectorised walk over the products f = h * g, g monic of fixed degree over F_q.

h has integer coefficients (reduced mod p), so each power-basis coordinate of
f depends only on the same coordinate of g: F_{p^m} splits into m copies of
F_p and no extension-field multiplication is needed.

Cofactors are ranked by r = sum_j idx(g_j) q^j over the non-leading
coefficients, i.e. lexicographic order of (g_{d-1}, ..., g_0) with each
coordinate in enumerate_elements order.  Rank ranges [t q^{d-1}, (t+1) q^{d-1})
fix the top non-leading coefficient to element t and are the unit of work
handed to a worker.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

DEFAULT_BUDGET = int(os.environ.get("MINWEIGHT_BUDGET", 10**6))
CHUNK = 1 << 15
MAX_SUPPORT_BITS = 20


@dataclass(frozen=True)
class CofactorSweep:
    p: int
    m: int
    h: tuple[int, ...]  # low to high, leading entry nonzero mod p
    d: int  # degree of the monic cofactor g
    _mat: np.ndarray = field(init=False, repr=False, compare=False)
    _lead: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        n = self.n
        mat = np.zeros((self.d, n + 1), dtype=np.int64)
        lead = np.zeros(n + 1, dtype=np.int64)
        h = np.array([c % self.p for c in self.h], dtype=np.int64)
        for j in range(self.d):
            mat[j, j : j + len(h)] = h
        lead[self.d : self.d + len(h)] = h
        object.__setattr__(self, "_mat", mat)
        object.__setattr__(self, "_lead", lead)

    @property
    def q(self) -> int:
        return self.p**self.m

    @property
    def n(self) -> int:
        return self.d + len(self.h) - 1

    @property
    def size(self) -> int:
        return self.q**self.d

    def partitions(self) -> list[tuple[int, int]]:
        """One rank range per value of g_{d-1}; a single range when d = 0."""
        if self.d == 0:
            return [(0, 1)]
        step = self.q ** (self.d - 1)
        return [(t * step, (t + 1) * step) for t in range(self.q)]

    def cofactor_indices(self, start: int, stop: int) -> np.ndarray:
        r = np.arange(start, stop, dtype=np.int64)
        powers = self.q ** np.arange(self.d, dtype=np.int64)
        return (r[:, None] // powers[None, :]) % self.q

    def nonzero(self, start: int, stop: int) -> np.ndarray:
        """Boolean (N, n+1) array: coefficient i of f is nonzero, one row per rank."""
        G = self.cofactor_indices(start, stop)
        out = np.zeros((stop - start, self.n + 1), dtype=bool)
        for c in range(self.m):
            Gc = (G // self.p**c) % self.p
            Fc = Gc @ self._mat
            if c == 0:
                Fc += self._lead
            out |= (Fc % self.p) != 0
        return out

    def cofactor_nonzero_at(self, start: int, stop: int, point: int) -> np.ndarray:
        """Whether g(point) != 0 for an integer point (e.g. 1 or -1)."""
        G = self.cofactor_indices(start, stop)
        w = np.array([pow(point, j, self.p) for j in range(self.d)], dtype=np.int64)
        out = np.zeros(stop - start, dtype=bool)
        for c in range(self.m):
            Gc = (G // self.p**c) % self.p
            v = Gc @ w
            if c == 0:
                v += pow(point, self.d, self.p)
            out |= (v % self.p) != 0
        return out

    def coefficients(self, rank: int) -> list[int]:
        """Coefficient indices of f (low to high) for one rank; reference path."""
        G = self.cofactor_indices(rank, rank + 1)[0]
        coeffs = []
        for c in range(self.m):
            Gc = (G // self.p**c) % self.p
            Fc = Gc @ self._mat + (self._lead if c == 0 else 0)
            coeffs.append(Fc % self.p)
        return [int(sum(int(coeffs[c][i]) * self.p**c for c in range(self.m))) for i in range(self.n + 1)]


@dataclass
class Tally:
    """Mergeable exact tallies of one or more rank ranges."""

    weights: dict[int, int] = field(default_factory=dict)
    supports: dict[int, int] = field(default_factory=dict)
    first_rank: dict[int, int] = field(default_factory=dict)  # weight -> smallest rank
    total: int = 0

    def merge(self, other: Tally) -> Tally:
        for w, c in other.weights.items():
            self.weights[w] = self.weights.get(w, 0) + c
        for s, c in other.supports.items():
            self.supports[s] = self.supports.get(s, 0) + c
        for w, r in other.first_rank.items():
            self.first_rank[w] = min(r, self.first_rank.get(w, r))
        self.total += other.total
        return self


def tally_range(
    sweep: CofactorSweep,
    start: int,
    stop: int,
    supports: bool = False,
    require_nonzero_at: int | None = None,
) -> Tally:
    """Weight (and optionally support) tally of ranks in [start, stop).

    With require_nonzero_at set, only cofactors with g(point) != 0 are counted.
    Supports are bit masks over the coefficients below the leading one.
    """
    n = sweep.n
    t = Tally()
    bits = (1 << np.arange(n, dtype=np.int64)) if supports else None
    for lo in range(start, stop, CHUNK):
        hi = min(lo + CHUNK, stop)
        nz = sweep.nonzero(lo, hi)
        ranks = np.arange(lo, hi, dtype=np.int64)
        if require_nonzero_at is not None:
            keep = sweep.cofactor_nonzero_at(lo, hi, require_nonzero_at)
            nz, ranks = nz[keep], ranks[keep]
        if not len(ranks):
            continue
        w = nz.sum(axis=1)
        counts = np.bincount(w, minlength=n + 2)
        for wt in np.flatnonzero(counts):
            wt = int(wt)
            t.weights[wt] = t.weights.get(wt, 0) + int(counts[wt])
            r = int(ranks[np.argmax(w == wt)])
            t.first_rank[wt] = min(r, t.first_rank.get(wt, r))
        if supports:
            masks = nz[:, :n].astype(np.int64) @ bits
            sc = np.bincount(masks, minlength=1 << n)
            for s in np.flatnonzero(sc):
                t.supports[int(s)] = t.supports.get(int(s), 0) + int(sc[s])
        t.total += len(ranks)
    return t


def _tally_ranges(args) -> Tally:
    sweep, ranges, supports, point = args
    t = Tally()
    for lo, hi in ranges:
        t.merge(tally_range(sweep, lo, hi, supports, point))
    return t


def run_sweep(
    sweep: CofactorSweep,
    workers: int = 1,
    supports: bool = False,
    require_nonzero_at: int | None = None,
) -> Tally:
    """Full tally over every cofactor, split by top coefficient across workers.

    Merging is a commutative integer sum (and a min for first ranks), so the
    result does not depend on the worker count.
    """
    if supports and sweep.n > MAX_SUPPORT_BITS:
        raise ValueError(f"support tallies need n <= {MAX_SUPPORT_BITS}")
    parts = sweep.partitions()
    workers = max(1, min(workers, len(parts)))
    groups = [parts[i::workers] for i in range(workers)]
    jobs = [(sweep, g, supports, require_nonzero_at) for g in groups]
    if workers == 1:
        results = [_tally_ranges(jobs[0])]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_tally_ranges, jobs))
    total = Tally()
    for r in results:
        total.merge(r)
    return total
