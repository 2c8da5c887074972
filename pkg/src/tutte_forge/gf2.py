"""Bit-packed linear algebra over GF(2).

Rows are Python ints; bit ``j`` of a row is the entry in column ``j``
(0-based, least significant bit first).  Python ints are unbounded, so the
word size only matters to the jitted census kernel.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


class DimensionMismatch(ValueError):
    """Two matrices that must share a column count do not."""


def popcount(x: int) -> int:
    return bin(x).count("1")


def bits_to_str(row: int, ncols: int) -> str:
    return "".join("1" if (row >> j) & 1 else "0" for j in range(ncols))


def str_to_bits(text: str) -> int:
    row = 0
    for j, ch in enumerate(text):
        if ch == "1":
            row |= 1 << j
        elif ch != "0":
            raise ValueError(f"invalid GF(2) digit {ch!r}")
    return row


@dataclass(frozen=True)
class GF2Matrix:
    rows: tuple[int, ...]
    ncols: int

    def __post_init__(self) -> None:
        if self.ncols < 0:
            raise ValueError("ncols must be nonnegative")
        limit = 1 << self.ncols
        for row in self.rows:
            if row < 0 or row >= limit:
                raise ValueError(f"row {row:#x} has bits beyond column {self.ncols - 1}")

    @classmethod
    def from_strings(cls, lines: Iterable[str], ncols: int | None = None) -> "GF2Matrix":
        lines = [ln.strip() for ln in lines]
        if ncols is None:
            ncols = len(lines[0]) if lines else 0
        for ln in lines:
            if len(ln) != ncols:
                raise DimensionMismatch(f"row {ln!r} does not have {ncols} columns")
        return cls(tuple(str_to_bits(ln) for ln in lines), ncols)

    @classmethod
    def from_lists(cls, data: Sequence[Sequence[int]], ncols: int | None = None) -> "GF2Matrix":
        if ncols is None:
            ncols = len(data[0]) if data else 0
        return cls.from_strings(("".join(str(int(b) & 1) for b in row) for row in data), ncols)

    @classmethod
    def identity(cls, k: int) -> "GF2Matrix":
        return cls(tuple(1 << i for i in range(k)), k)

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "GF2Matrix":
        return cls((0,) * nrows, ncols)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> int:
        return (self.rows[i] >> j) & 1

    def column(self, j: int) -> int:
        """Column ``j`` packed as an int whose bit ``i`` is row ``i``."""
        col = 0
        for i, row in enumerate(self.rows):
            if (row >> j) & 1:
                col |= 1 << i
        return col

    def columns(self) -> list[int]:
        return [self.column(j) for j in range(self.ncols)]

    def transpose(self) -> "GF2Matrix":
        return GF2Matrix(tuple(self.columns()), self.nrows)

    def select_columns(self, cols: Sequence[int]) -> "GF2Matrix":
        out = []
        for row in self.rows:
            v = 0
            for k, j in enumerate(cols):
                if (row >> j) & 1:
                    v |= 1 << k
            out.append(v)
        return GF2Matrix(tuple(out), len(cols))

    def hstack(self, other: "GF2Matrix") -> "GF2Matrix":
        if self.nrows != other.nrows:
            raise DimensionMismatch("hstack needs equal row counts")
        shift = self.ncols
        return GF2Matrix(
            tuple(a | (b << shift) for a, b in zip(self.rows, other.rows)),
            self.ncols + other.ncols,
        )

    def vstack(self, other: "GF2Matrix") -> "GF2Matrix":
        if self.ncols != other.ncols:
            raise DimensionMismatch(f"cannot stack {self.ncols} and {other.ncols} columns")
        return GF2Matrix(self.rows + other.rows, self.ncols)

    def mul_vec(self, v: int) -> int:
        """Return ``self @ v`` packed with bit ``i`` for row ``i``."""
        out = 0
        for i, row in enumerate(self.rows):
            if popcount(row & v) & 1:
                out |= 1 << i
        return out

    def to_strings(self) -> list[str]:
        return [bits_to_str(row, self.ncols) for row in self.rows]

    def __str__(self) -> str:
        return "\n".join(self.to_strings())


def _eliminate(rows: Sequence[int], ncols: int) -> tuple[list[int], list[int]]:
    work = [r for r in rows if r]
    pivots: list[int] = []
    rank = 0
    for col in range(ncols):
        bit = 1 << col
        pivot = None
        for i in range(rank, len(work)):
            if work[i] & bit:
                pivot = i
                break
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        prow = work[rank]
        for i in range(len(work)):
            if i != rank and work[i] & bit:
                work[i] ^= prow
        pivots.append(col)
        rank += 1
        if rank == len(work):
            break
    return work[:rank], pivots


def rank(m: GF2Matrix) -> int:
    return rank_of_rows(m.rows)


def rank_of_rows(rows: Iterable[int]) -> int:
    """Rank of a collection of bit rows, via a leading-bit XOR basis."""
    basis: dict[int, int] = {}
    for v in rows:
        while v:
            top = v.bit_length() - 1
            b = basis.get(top)
            if b is None:
                basis[top] = v
                break
            v ^= b
    return len(basis)


def rref(m: GF2Matrix) -> tuple[GF2Matrix, list[int]]:
    """Reduced row-echelon form with zero rows dropped, plus pivot columns."""
    rows, pivots = _eliminate(m.rows, m.ncols)
    return GF2Matrix(tuple(rows), m.ncols), pivots


def kernel_basis(m: GF2Matrix) -> GF2Matrix:
    """Basis of ``{v : m v = 0}``, one row per free column of the RREF."""
    rows, pivots = _eliminate(m.rows, m.ncols)
    pivot_set = set(pivots)
    basis = []
    for free in range(m.ncols):
        if free in pivot_set:
            continue
        v = 1 << free
        for row, p in zip(rows, pivots):
            if (row >> free) & 1:
                v |= 1 << p
        basis.append(v)
    return GF2Matrix(tuple(basis), m.ncols)


def sum_dim(u: GF2Matrix, w: GF2Matrix) -> int:
    if u.ncols != w.ncols:
        raise DimensionMismatch(f"cannot add subspaces of GF(2)^{u.ncols} and GF(2)^{w.ncols}")
    return rank_of_rows(u.rows + w.rows)


def intersection_dim(u: GF2Matrix, w: GF2Matrix) -> int:
    return rank(u) + rank(w) - sum_dim(u, w)


def row_space_equal(a: GF2Matrix, b: GF2Matrix) -> bool:
    if a.ncols != b.ncols:
        raise DimensionMismatch(f"cannot compare row spaces in GF(2)^{a.ncols} and GF(2)^{b.ncols}")
    return rref(a)[0].rows == rref(b)[0].rows


def span(m: GF2Matrix) -> list[int]:
    """All 2^rank elements of the row space (Gray-code order)."""
    basis = rref(m)[0].rows
    out = [0]
    v = 0
    for i in range(1, 1 << len(basis)):
        v ^= basis[(i & -i).bit_length() - 1]
        out.append(v)
    return out
