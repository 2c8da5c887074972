"""Tutte polynomials: census expansion, deletion-contraction oracle, exact evaluation."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Union

from .census import RankNullityCensus
from .errors import BudgetExceededError
from .gf2 import rank_of_rows
from .matroid import BinaryMatroid
from .polynomial import Polynomial

Number = Union[int, Fraction]


@dataclass(frozen=True)
class TuttePolynomial:
    """``coeffs[i][j]`` is the coefficient of ``x**i * y**j``."""

    coeffs: tuple[tuple[int, ...], ...]

    @classmethod
    def from_terms(cls, terms: dict[tuple[int, int], int], r: int, corank: int) -> "TuttePolynomial":
        grid = [[0] * (corank + 1) for _ in range(r + 1)]
        for (i, j), c in terms.items():
            grid[i][j] += c
        return cls(tuple(tuple(row) for row in grid))

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.coeffs), len(self.coeffs[0]) if self.coeffs else 0

    def coefficient(self, i: int, j: int) -> int:
        if 0 <= i < len(self.coeffs) and 0 <= j < len(self.coeffs[i]):
            return self.coeffs[i][j]
        return 0

    def terms(self) -> list[tuple[int, int, int]]:
        """Nonzero ``(i, j, c)`` triples sorted by ``(i, j)``."""
        return [(i, j, c) for i, row in enumerate(self.coeffs) for j, c in enumerate(row) if c]

    def transpose(self) -> "TuttePolynomial":
        rows, cols = self.shape
        return TuttePolynomial(tuple(tuple(self.coeffs[i][j] for i in range(rows)) for j in range(cols)))

    def __call__(self, x: Number, y: Number) -> Number:
        return evaluate(self, x, y)

    def __str__(self) -> str:
        """Terms by descending total degree, then descending power of ``x``."""
        ordered = sorted(self.terms(), key=lambda t: (-(t[0] + t[1]), -t[0]))
        parts = []
        for i, j, c in ordered:
            mono = " ".join(
                p for p in (
                    "" if i == 0 else ("x" if i == 1 else f"x^{i}"),
                    "" if j == 0 else ("y" if j == 1 else f"y^{j}"),
                ) if p
            )
            if not mono:
                parts.append(str(c))
            else:
                parts.append(mono if c == 1 else f"{c} {mono}")
        return " + ".join(parts) if parts else "0"


def tutte_from_census(c: RankNullityCensus) -> TuttePolynomial:
    """Expand ``sum N[rho][nu] (x-1)^rho (y-1)^nu`` into monomial coefficients."""
    rows = c.r + 1
    cols = c.n - c.r + 1
    # expand in y first: partial[rho][j] = sum_nu N[rho][nu] C(nu, j) (-1)^(nu-j)
    partial = [[0] * cols for _ in range(rows)]
    for rho in range(rows):
        for nu in range(cols):
            v = c.counts[rho][nu]
            if v:
                for j in range(nu + 1):
                    partial[rho][j] += v * comb(nu, j) * (-1 if (nu - j) & 1 else 1)
    grid = [[0] * cols for _ in range(rows)]
    for rho in range(rows):
        for j in range(cols):
            v = partial[rho][j]
            if v:
                for i in range(rho + 1):
                    grid[i][j] += v * comb(rho, i) * (-1 if (rho - i) & 1 else 1)
    return TuttePolynomial(tuple(tuple(row) for row in grid))


def evaluate(t: TuttePolynomial, x: Number, y: Number) -> Number:
    x = Fraction(x)
    y = Fraction(y)
    acc = Fraction(0)
    for i in range(len(t.coeffs) - 1, -1, -1):
        row_val = Fraction(0)
        for cij in reversed(t.coeffs[i]):
            row_val = row_val * y + cij
        acc = acc * x + row_val
    return int(acc) if acc.denominator == 1 else acc


def diagonal_poly(c: RankNullityCensus, offset: int, scale: int) -> Polynomial:
    """``T(offset+1 + scale*z, offset+1 + scale*z)`` as an integer polynomial in ``z``."""
    return Polynomial.linear_power_sum(c.diagonal_weights(), offset, scale)


# -- deletion-contraction ---------------------------------------------

Terms = dict  # (i, j) -> int


def _add(a: Terms, b: Terms) -> Terms:
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, 0) + v
    return out


def _shift(a: Terms, di: int, dj: int) -> Terms:
    if not di and not dj:
        return a
    return {(i + di, j + dj): v for (i, j), v in a.items()}


def _canonical_key(cols: tuple[int, ...], r: int) -> tuple:
    rows = []
    for i in range(r):
        row = 0
        for j, col in enumerate(cols):
            if (col >> i) & 1:
                row |= 1 << j
        rows.append(row)
    # rref of the row space (full row rank, so no zero rows)
    ncols = len(cols)
    rank = 0
    for col in range(ncols):
        bit = 1 << col
        pivot = next((k for k in range(rank, len(rows)) if rows[k] & bit), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for k in range(len(rows)):
            if k != rank and rows[k] & bit:
                rows[k] ^= rows[rank]
        rank += 1
    return (ncols, tuple(rows))


def _contract_col(cols: tuple[int, ...], e: int) -> tuple[int, ...]:
    ce = cols[e]
    low = ce & -ce
    i = low.bit_length() - 1
    out = []
    for k, c in enumerate(cols):
        if k == e:
            continue
        if c & low:
            c ^= ce
        out.append((c & (low - 1)) | ((c >> (i + 1)) << i))
    return tuple(out)


class _DelCon:
    def __init__(self, budget: int):
        self.budget = budget
        self.calls = 0
        self.memo: dict[tuple, Terms] = {}

    def solve(self, cols: tuple[int, ...], r: int) -> Terms:
        loops = sum(1 for c in cols if c == 0)
        cols = tuple(c for c in cols if c)
        return _shift(self._loopless(cols, r), 0, loops)

    def _loopless(self, cols: tuple[int, ...], r: int) -> Terms:
        if not cols:
            return {(0, 0): 1}
        key = _canonical_key(cols, r)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        self.calls += 1
        if self.calls > self.budget:
            raise BudgetExceededError(f"deletion-contraction exceeded {self.budget} subproblems")
        rest = cols[1:]
        contracted = _contract_col(cols, 0)
        if rank_of_rows(rest) < r:
            # coloop: T = x * T(M/e)
            result = _shift(self.solve(contracted, r - 1), 1, 0)
        else:
            result = _add(self.solve(rest, r), self.solve(contracted, r - 1))
        self.memo[key] = result
        return result


def tutte_delcon(m: BinaryMatroid, budget: int = 2_000_000) -> TuttePolynomial:
    """Tutte polynomial by memoized deletion-contraction; independent of the census path."""
    terms = _DelCon(budget).solve(m.columns, m.r)
    return TuttePolynomial.from_terms(terms, m.r, m.n - m.r)


def tutte(m: BinaryMatroid, workers: int | None = None) -> TuttePolynomial:
    from .census import census

    return tutte_from_census(census(m, workers))
