"""Rank-nullity census: counts of subsets by (corank, nullity).

The census is the compressed form of the Tutte polynomial,
``T(x, y) = sum N[rho][nu] (x-1)**rho (y-1)**nu``.  It is computed by a
depth-first walk over include/exclude decisions per element, keeping an
XOR basis indexed by leading bit so that each include costs O(r) word
operations and is undone in O(1) on backtrack.
"""

from __future__ import annotations

import hashlib
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import ceil, log2

import numpy as np
from numba import njit

from .errors import SizeGuardError
from .matroid import BinaryMatroid

MAX_CENSUS_N = 30
MAX_CENSUS_R = 62


@njit(cache=True, nogil=True)
def _insert(basis, v, top):
    """Reduce ``v`` against ``basis``; store it and return its pivot, or -1 if dependent."""
    b = top
    while b >= 0:
        if (v >> b) & 1:
            if basis[b] != 0:
                v ^= basis[b]
            else:
                basis[b] = v
                return b
        b -= 1
    return -1


@njit(cache=True, nogil=True)
def _subtree(cols, start, basis, rank, size, r_full, counts):
    """Census of all extensions of the current subset by elements ``start..n-1``.

    Adds into ``counts`` and returns the number of DFS nodes visited.
    """
    n = cols.shape[0]
    top = r_full - 1
    if start == n:
        counts[r_full - rank, size - rank] += 1
        return 1
    choice = np.zeros(n, np.int8)
    piv = np.full(n, -1, np.int64)
    d = start
    nodes = 1
    while True:
        if d < n:
            choice[d] = 0
            d += 1
            nodes += 1
            continue
        counts[r_full - rank, size - rank] += 1
        while True:
            d -= 1
            if d < start:
                return nodes
            if choice[d] == 0:
                choice[d] = 1
                p = _insert(basis, cols[d], top)
                piv[d] = p
                if p >= 0:
                    rank += 1
                size += 1
                d += 1
                nodes += 1
                break
            if piv[d] >= 0:
                basis[piv[d]] = 0
                rank -= 1
            size -= 1


@njit(cache=True, nogil=True)
def _prefix_census(cols, r_full, k, prefix, counts):
    """Census of the subtree below one include/exclude pattern on the first ``k`` elements."""
    basis = np.zeros(max(r_full, 1), np.int64)
    rank = 0
    size = 0
    for i in range(k):
        if (prefix >> i) & 1:
            size += 1
            if _insert(basis, cols[i], r_full - 1) >= 0:
                rank += 1
    return _subtree(cols, k, basis, rank, size, r_full, counts)


@njit(cache=True, nogil=True)
def _full_census(cols, r_full, counts):
    basis = np.zeros(max(r_full, 1), np.int64)
    return _subtree(cols, 0, basis, 0, 0, r_full, counts)


@dataclass(frozen=True)
class RankNullityCensus:
    counts: tuple[tuple[int, ...], ...]
    r: int
    n: int

    def __getitem__(self, key: tuple[int, int]) -> int:
        rho, nu = key
        return self.counts[rho][nu]

    @property
    def total(self) -> int:
        return sum(sum(row) for row in self.counts)

    def diagonal_weights(self) -> list[int]:
        """``C_k = sum_{rho+nu=k} N[rho][nu]`` for ``k = 0..n``."""
        out = [0] * (self.n + 1)
        for rho, row in enumerate(self.counts):
            for nu, c in enumerate(row):
                out[rho + nu] += c
        return out

    def fingerprint(self) -> str:
        text = f"{self.r} {self.n}\n" + "\n".join(" ".join(map(str, row)) for row in self.counts)
        return hashlib.sha256(text.encode()).hexdigest()[:32]

    def __add__(self, other: "RankNullityCensus") -> "RankNullityCensus":
        if (self.r, self.n) != (other.r, other.n):
            raise ValueError("cannot add censuses of different shapes")
        return RankNullityCensus(
            tuple(tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(self.counts, other.counts)),
            self.r,
            self.n,
        )


def default_workers() -> int:
    env = os.environ.get("TUTTE_FORGE_WORKERS")
    if env:
        return max(1, int(env))
    return 1


def split_depth(n: int, workers: int) -> int:
    """Number of leading decisions to split on so that 2^k >= 8 * workers."""
    return min(n, max(0, ceil(log2(8 * max(1, workers)))))


def column_array(m: BinaryMatroid) -> np.ndarray:
    return np.array(m.columns, dtype=np.int64)


def _to_census(arr: np.ndarray, r: int, n: int) -> RankNullityCensus:
    return RankNullityCensus(tuple(tuple(int(c) for c in row) for row in arr), r, n)


def census_with_nodes(
    m: BinaryMatroid, workers: int | None = None, split: int | None = None
) -> tuple[RankNullityCensus, int]:
    """Census and DFS node count; the count is always ``2**(n+1) - 1``."""
    if m.n > MAX_CENSUS_N:
        raise SizeGuardError(f"census refused for n={m.n} > {MAX_CENSUS_N}")
    if m.r > MAX_CENSUS_R:
        raise SizeGuardError(f"census refused for r={m.r} > {MAX_CENSUS_R}")
    workers = default_workers() if workers is None else max(1, workers)
    cols = column_array(m)
    shape = (m.r + 1, m.n - m.r + 1)
    k = split_depth(m.n, workers) if split is None else min(split, m.n)
    if workers == 1 and split is None:
        counts = np.zeros(shape, np.int64)
        nodes = int(_full_census(cols, m.r, counts))
        return _to_census(counts, m.r, m.n), nodes

    def run(prefixes: range) -> tuple[np.ndarray, int]:
        acc = np.zeros(shape, np.int64)
        nodes = 0
        for p in prefixes:
            nodes += int(_prefix_census(cols, m.r, k, p, acc))
        return acc, nodes

    total = 1 << k
    chunks = [range(w, total, workers) for w in range(min(workers, total))]
    if workers == 1:
        results = [run(c) for c in chunks]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run, chunks))
    counts = np.zeros(shape, np.int64)
    nodes = total - 1
    for acc, sub in results:
        counts += acc
        nodes += sub
    return _to_census(counts, m.r, m.n), nodes


def census(m: BinaryMatroid, workers: int | None = None, split: int | None = None) -> RankNullityCensus:
    return census_with_nodes(m, workers, split)[0]


def census_bruteforce(m: BinaryMatroid) -> RankNullityCensus:
    """Direct enumeration of all 2^n subsets; a test oracle for small ``n``."""
    from .gf2 import rank_of_rows

    if m.n > 16:
        raise SizeGuardError(f"brute-force census refused for n={m.n} > 16")
    counts = [[0] * (m.n - m.r + 1) for _ in range(m.r + 1)]
    cols = m.columns
    for mask in range(1 << m.n):
        sub = [cols[j] for j in range(m.n) if (mask >> j) & 1]
        rk = rank_of_rows(sub)
        counts[m.r - rk][len(sub) - rk] += 1
    return RankNullityCensus(tuple(tuple(row) for row in counts), m.r, m.n)


@njit(cache=True, nogil=True)
def _reduced_batch(r, n, first, count, out):
    """Censuses of ``[I_r | D]`` for ``count`` consecutive bit patterns of ``D``.

    Bit ``i*(n-r) + k`` of the pattern is ``D[i][k]``.
    """
    q = n - r
    cols = np.zeros(n, np.int64)
    for i in range(r):
        cols[i] = 1 << i
    for t in range(count):
        pattern = first + t
        for k in range(q):
            col = 0
            for i in range(r):
                if (pattern >> (i * q + k)) & 1:
                    col |= 1 << i
            cols[r + k] = col
        _full_census(cols, r, out[t])


def reduced_censuses(r: int, n: int, chunk: int = 1 << 16):
    """Yield ``(pattern, census_array)`` for the distinct censuses within each chunk of D patterns."""
    total = 1 << (r * (n - r))
    for first in range(0, total, chunk):
        count = min(chunk, total - first)
        out = np.zeros((count, r + 1, n - r + 1), np.int64)
        _reduced_batch(r, n, first, count, out)
        flat = out.reshape(count, -1)
        _, idx = np.unique(flat, axis=0, return_index=True)
        for t in sorted(idx.tolist()):
            yield first + t, out[t]
