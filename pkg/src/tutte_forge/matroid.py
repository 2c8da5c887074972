"""Binary matroids as labelled column matroids of full-row-rank GF(2) matrices."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Hashable, Iterable, Sequence

from .errors import BudgetExceededError, SizeGuardError, UnknownElementError
from .gf2 import GF2Matrix, kernel_basis, popcount, rank, rank_of_rows, row_space_equal, rref, span

Label = Hashable


def _drop_bit(x: int, j: int) -> int:
    return (x & ((1 << j) - 1)) | ((x >> (j + 1)) << j)


@dataclass(frozen=True)
class MinorSpec:
    contract: frozenset = frozenset()
    delete: frozenset = frozenset()

    def __post_init__(self) -> None:
        object.__setattr__(self, "contract", frozenset(self.contract))
        object.__setattr__(self, "delete", frozenset(self.delete))
        if self.contract & self.delete:
            raise ValueError("contract and delete sets must be disjoint")


@dataclass(frozen=True, eq=True)
class BinaryMatroid:
    rep: GF2Matrix
    labels: tuple = field(default=())

    def __post_init__(self) -> None:
        labels = tuple(self.labels) if self.labels else tuple(range(self.rep.ncols))
        object.__setattr__(self, "labels", labels)
        if len(labels) != self.rep.ncols:
            raise ValueError(f"{len(labels)} labels for {self.rep.ncols} columns")
        if len(set(labels)) != len(labels):
            raise ValueError("labels must be pairwise distinct")
        if rank(self.rep) != self.rep.nrows:
            raise ValueError("representation must have full row rank")

    # -- construction -------------------------------------------------

    @classmethod
    def from_reduced(cls, d: GF2Matrix, labels: Sequence[Label] | None = None) -> "BinaryMatroid":
        """Matroid of ``[I_r | D]``."""
        r = d.nrows
        n = r + d.ncols
        if labels is not None and len(labels) != n:
            raise ValueError(f"expected {n} labels, got {len(labels)}")
        rows = tuple((1 << i) | (row << r) for i, row in enumerate(d.rows))
        return cls(GF2Matrix(rows, n), tuple(labels) if labels is not None else ())

    @classmethod
    def from_full(cls, m: GF2Matrix, labels: Sequence[Label] | None = None) -> "BinaryMatroid":
        """Column matroid of ``m``; dependent rows are allowed and removed."""
        reduced, _ = rref(m)
        if labels is not None and len(labels) != m.ncols:
            raise ValueError(f"expected {m.ncols} labels, got {len(labels)}")
        return cls(reduced, tuple(labels) if labels is not None else ())

    # -- basic data ---------------------------------------------------

    @property
    def r(self) -> int:
        return self.rep.nrows

    @property
    def n(self) -> int:
        return self.rep.ncols

    @cached_property
    def columns(self) -> tuple[int, ...]:
        return tuple(self.rep.columns())

    @cached_property
    def _index(self) -> dict:
        return {lab: j for j, lab in enumerate(self.labels)}

    def index_of(self, e: Label) -> int:
        try:
            return self._index[e]
        except KeyError:
            raise UnknownElementError(e) from None

    def indices(self, elements: Iterable[Label]) -> list[int]:
        return [self.index_of(e) for e in elements]

    def rank_of_subset(self, a: Iterable[Label]) -> int:
        cols = self.columns
        return rank_of_rows(cols[j] for j in self.indices(a))

    def is_loop(self, e: Label) -> bool:
        return self.columns[self.index_of(e)] == 0

    def is_coloop(self, e: Label) -> bool:
        j = self.index_of(e)
        cols = self.columns
        return rank_of_rows(c for k, c in enumerate(cols) if k != j) < self.r

    def loops(self) -> list[Label]:
        return [lab for lab, c in zip(self.labels, self.columns) if c == 0]

    def coloops(self) -> list[Label]:
        return [lab for lab in self.labels if self.is_coloop(lab)]

    def __repr__(self) -> str:
        return f"BinaryMatroid(r={self.r}, n={self.n})"

    # -- minors -------------------------------------------------------

    def delete(self, e: Label) -> "BinaryMatroid":
        j = self.index_of(e)
        rows = tuple(_drop_bit(row, j) for row in self.rep.rows)
        labels = self.labels[:j] + self.labels[j + 1:]
        m = GF2Matrix(rows, self.n - 1)
        if rank_of_rows(rows) < len(rows):
            m = rref(m)[0]
        return BinaryMatroid(m, labels)

    def contract(self, e: Label) -> "BinaryMatroid":
        j = self.index_of(e)
        bit = 1 << j
        rows = list(self.rep.rows)
        pivot = next((i for i, row in enumerate(rows) if row & bit), None)
        if pivot is None:
            return self.delete(e)
        prow = rows[pivot]
        out = []
        for i, row in enumerate(rows):
            if i == pivot:
                continue
            if row & bit:
                row ^= prow
            out.append(_drop_bit(row, j))
        labels = self.labels[:j] + self.labels[j + 1:]
        return BinaryMatroid(GF2Matrix(tuple(out), self.n - 1), labels)

    def minor(self, contract: Iterable[Label] = (), delete: Iterable[Label] = ()) -> "BinaryMatroid":
        spec = MinorSpec(frozenset(contract), frozenset(delete))
        for e in list(spec.contract) + list(spec.delete):
            self.index_of(e)
        m = self
        for e in sorted(spec.contract, key=self.index_of):
            m = m.contract(e)
        for e in sorted(spec.delete, key=self.index_of):
            m = m.delete(e)
        return m

    # -- duality ------------------------------------------------------

    def dual(self) -> "BinaryMatroid":
        """Dual matroid, represented by the standard-form kernel basis of ``rep``."""
        return BinaryMatroid(kernel_basis(self.rep), self.labels)

    def is_identically_self_dual(self) -> bool:
        return row_space_equal(self.rep, kernel_basis(self.rep))

    def same_column_matroid(self, other: "BinaryMatroid") -> bool:
        """Equal as labelled matroids (same labels in the same order, same row space)."""
        if self.labels != other.labels or self.r != other.r:
            return False
        return row_space_equal(self.rep, other.rep)

    # -- brute force --------------------------------------------------

    def count_bases_bruteforce(self) -> int:
        if self.n > 24:
            raise SizeGuardError(f"basis enumeration refused for n={self.n} > 24")
        cols = self.columns
        return sum(1 for sub in combinations(cols, self.r) if rank_of_rows(sub) == self.r)


# -- isomorphism ------------------------------------------------------

_PROFILE_MAX_DIM = 16


def _weight_profile(code: GF2Matrix, n: int, max_weight: int | None) -> tuple[tuple[int, ...], list[tuple]]:
    """Weight distribution of a code and, per column, counts of low-weight words covering it."""
    if code.nrows > _PROFILE_MAX_DIM:
        return (), [()] * n
    words = span(code)
    dist = Counter(popcount(w) for w in words)
    distribution = tuple(dist.get(w, 0) for w in range(n + 1))
    if max_weight is None:
        nonzero = [w for w in dist if w > 0]
        max_weight = (min(nonzero) if nonzero else 0) + 2
    per_col = [[0] * (max_weight + 1) for _ in range(n)]
    for w in words:
        wt = popcount(w)
        if 0 < wt <= max_weight:
            x = w
            while x:
                low = x & -x
                per_col[low.bit_length() - 1][wt] += 1
                x ^= low
    return distribution, [tuple(p) for p in per_col]


def _min_weight(code: GF2Matrix) -> int | None:
    if code.nrows == 0 or code.nrows > _PROFILE_MAX_DIM:
        return None
    return min(popcount(w) for w in span(code) if w)


def _column_invariants(m: BinaryMatroid, w_row: int | None, w_ker: int | None) -> tuple[tuple, list[tuple]]:
    dist_r, prof_r = _weight_profile(m.rep, m.n, w_row)
    dist_k, prof_k = _weight_profile(kernel_basis(m.rep), m.n, w_ker)
    return (dist_r, dist_k), [(a, b) for a, b in zip(prof_r, prof_k)]


def is_isomorphic(m1: BinaryMatroid, m2: BinaryMatroid, node_budget: int = 1_000_000) -> bool:
    """Decide matroid isomorphism by searching for a column permutation between the codes.

    Binary matroids are uniquely representable, so ``m1`` and ``m2`` are
    isomorphic iff some invertible ``T`` and bijection ``s`` satisfy
    ``T a_e = b_s(e)`` for all columns.  ``T`` is fixed by the images of a
    basis of ``m1``; those images are chosen by backtracking, pruned by
    per-column weight profiles and by checking every column already in the
    span of the assigned basis.  Raises ``BudgetExceededError`` after
    ``node_budget`` basis assignments.
    """
    if (m1.r, m1.n) != (m2.r, m2.n):
        return False
    n, r = m1.n, m1.r
    w_row = _min_weight(m1.rep)
    w_ker = _min_weight(kernel_basis(m1.rep))
    w_row = None if w_row is None else w_row + 2
    w_ker = None if w_ker is None else w_ker + 2
    glob1, prof1 = _column_invariants(m1, w_row or 0, w_ker or 0)
    glob2, prof2 = _column_invariants(m2, w_row or 0, w_ker or 0)
    if glob1 != glob2 or Counter(prof1) != Counter(prof2):
        return False

    a_cols = m1.columns
    b_cols = m2.columns
    pool = Counter(zip(b_cols, prof2))

    # basis of m1, rarest profile classes first
    class_size = Counter(prof1)
    order = sorted(range(n), key=lambda j: (class_size[prof1[j]], j))
    basis_idx: list[int] = []
    reducer: dict[int, tuple[int, int]] = {}
    for j in order:
        v, c = a_cols[j], 0
        while v:
            top = v.bit_length() - 1
            if top not in reducer:
                break
            bv, bc = reducer[top]
            v ^= bv
            c ^= bc
        if v:
            k = len(basis_idx)
            reducer[v.bit_length() - 1] = (v, c ^ (1 << k))
            basis_idx.append(j)
            if len(basis_idx) == r:
                break

    def coords(vec: int) -> int:
        c = 0
        while vec:
            bv, bc = reducer[vec.bit_length() - 1]
            vec ^= bv
            c ^= bc
        return c

    basis_set = set(basis_idx)
    completed: list[list[tuple[int, int]]] = [[] for _ in range(r + 1)]
    for j in range(n):
        if j in basis_set:
            continue
        c = coords(a_cols[j])
        completed[c.bit_length()].append((j, c))

    images: list[int] = []
    nodes = 0

    def take(level: int) -> list[tuple] | None:
        used = []
        for j, c in completed[level]:
            v = 0
            x = c
            while x:
                low = x & -x
                v ^= images[low.bit_length() - 1]
                x ^= low
            key = (v, prof1[j])
            if pool[key] <= 0:
                for u in used:
                    pool[u] += 1
                return None
            pool[key] -= 1
            used.append(key)
        return used

    def search(level: int, img_basis: dict[int, int]) -> bool:
        nonlocal nodes
        if level == r:
            return True
        target = prof1[basis_idx[level]]
        for key in list(pool):
            vec, prof = key
            if prof != target or pool[key] <= 0 or vec == 0:
                continue
            x = vec
            while x:
                b = img_basis.get(x.bit_length() - 1)
                if b is None:
                    break
                x ^= b
            if not x:
                continue
            nodes += 1
            if nodes > node_budget:
                raise BudgetExceededError(f"isomorphism search exceeded {node_budget} nodes")
            pool[key] -= 1
            images.append(vec)
            used = take(level + 1)
            if used is not None:
                img_basis[x.bit_length() - 1] = x
                if search(level + 1, img_basis):
                    return True
                del img_basis[x.bit_length() - 1]
                for u in used:
                    pool[u] += 1
            images.pop()
            pool[key] += 1
        return False

    if take(0) is None:
        return False
    return search(0, {})
