"""Bicycle dimension, the T(-1,-1) identity, and the odd-integer test for Q_M(z).

``Q_M(z) = T_M(-1+4z, -1+4z) / T_M(-1, -1)``.  The conjecture under test
asserts ``Q_M(z)`` is an odd integer for every integer ``z``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from .census import RankNullityCensus, census
from .errors import ZeroDivisorError
from .gf2 import kernel_basis, sum_dim
from .matroid import BinaryMatroid
from .polynomial import Polynomial
from .tutte import TuttePolynomial, diagonal_poly, evaluate

DEFAULT_Z_RANGE = (-16, 16)

Number = Union[int, Fraction]


class Parity(enum.Enum):
    ODD_INTEGER = "OddInteger"
    EVEN_INTEGER = "EvenInteger"
    NON_INTEGER = "NonInteger"


@dataclass(frozen=True)
class ParityVerdict:
    kind: Parity
    value: Fraction

    @classmethod
    def of(cls, value: Number) -> "ParityVerdict":
        value = Fraction(value)
        if value.denominator != 1:
            kind = Parity.NON_INTEGER
        elif value.numerator % 2:
            kind = Parity.ODD_INTEGER
        else:
            kind = Parity.EVEN_INTEGER
        return cls(kind, value)

    @property
    def is_odd_integer(self) -> bool:
        return self.kind is Parity.ODD_INTEGER


@dataclass(frozen=True)
class QPolynomial:
    poly: Polynomial
    t_minus1: int

    def __call__(self, z: int) -> Number:
        return self.poly(z)

    @property
    def integer_coefficients(self) -> bool:
        return self.poly.is_integral()


@dataclass(frozen=True)
class ConjectureReport:
    matroid_id: str
    q: QPolynomial
    integer_coefficients: bool
    shortcut_used: bool
    z_range: tuple[int, int]
    violations: tuple[tuple[int, ParityVerdict], ...] = field(default=())

    @property
    def holds(self) -> bool:
        return not self.violations

    @property
    def verdict(self) -> str:
        if self.violations:
            return "counterexample"
        return "holds for all integers" if self.shortcut_used else "holds on scanned range"


def bicycle_dimension(m: BinaryMatroid) -> int:
    """dim(cocycle space ∩ cycle space) = dim(rowspace(rep) ∩ kernel(rep))."""
    ker = kernel_basis(m.rep)
    return m.r + ker.nrows - sum_dim(m.rep, ker)


def rosenstiehl_value(m: BinaryMatroid) -> int:
    """``(-1)^n (-2)^b`` with ``b`` the bicycle dimension."""
    return (-1) ** m.n * (-2) ** bicycle_dimension(m)


def check_rosenstiehl(m: BinaryMatroid, t: TuttePolynomial) -> bool:
    return evaluate(t, -1, -1) == rosenstiehl_value(m)


def q_from_census(c: RankNullityCensus) -> QPolynomial:
    numer = diagonal_poly(c, -2, 4)
    t_m1 = numer(0)
    if t_m1 == 0:
        raise ZeroDivisorError("T(-1,-1) = 0")
    return QPolynomial(numer.divide_exact(t_m1), t_m1)


def q_polynomial(m: BinaryMatroid, c: RankNullityCensus | None = None) -> QPolynomial:
    if c is None:
        c = census(m)
    if (c.r, c.n) != (m.r, m.n):
        raise ValueError("census does not belong to this matroid")
    return q_from_census(c)


def parity_at(q: QPolynomial, z: int) -> ParityVerdict:
    return ParityVerdict.of(q(z))


def check_theorem33(m: BinaryMatroid, t: TuttePolynomial) -> bool:
    """T(3,3)/T(-1,-1) must be an odd integer for every binary matroid."""
    ratio = Fraction(evaluate(t, 3, 3)) / Fraction(evaluate(t, -1, -1))
    return ParityVerdict.of(ratio).is_odd_integer


def conjecture_report(
    q: QPolynomial, z_range: tuple[int, int] = DEFAULT_Z_RANGE, matroid_id: str = ""
) -> ConjectureReport:
    lo, hi = z_range
    if lo > hi:
        raise ValueError(f"empty z range [{lo}, {hi}]")
    integral = q.integer_coefficients
    if integral:
        # integer coefficients: Q(z) mod 2 depends only on z mod 2
        by_class = {0: parity_at(q, 0), 1: parity_at(q, 1)}
        bad_classes = {k for k, v in by_class.items() if not v.is_odd_integer}
        violations = tuple((z, parity_at(q, z)) for z in range(lo, hi + 1) if z % 2 in bad_classes)
    else:
        violations = tuple(
            (z, v) for z in range(lo, hi + 1) if not (v := parity_at(q, z)).is_odd_integer
        )
    return ConjectureReport(matroid_id, q, integral, integral, (lo, hi), violations)


def check_conjecture(
    m: BinaryMatroid,
    z_range: tuple[int, int] = DEFAULT_Z_RANGE,
    c: RankNullityCensus | None = None,
    matroid_id: str = "",
) -> ConjectureReport:
    return conjecture_report(q_polynomial(m, c), z_range, matroid_id)
