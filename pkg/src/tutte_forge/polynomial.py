"""Univariate polynomials with exact integer or rational coefficients."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Union

Number = Union[int, Fraction]


def _normalize(c: Number) -> Number:
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c.numerator)
    return c


@dataclass(frozen=True)
class Polynomial:
    """``coeffs[k]`` is the coefficient of ``z**k``; no trailing zeros."""

    coeffs: tuple

    def __init__(self, coeffs: Iterable[Number] = ()):
        cs = [_normalize(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, z: Number) -> Number:
        acc: Number = 0
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return _normalize(acc) if isinstance(acc, Fraction) else acc

    def __getitem__(self, k: int) -> Number:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __add__(self, other: "Polynomial") -> "Polynomial":
        m = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(self[k] + other[k] for k in range(m))

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if not self.coeffs or not other.coeffs:
            return Polynomial()
        out: list[Number] = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Polynomial(out)

    def scale(self, k: Number) -> "Polynomial":
        return Polynomial(c * k for c in self.coeffs)

    def divide_exact(self, d: int) -> "Polynomial":
        """Coefficient-wise division by an integer, as reduced fractions."""
        if d == 0:
            raise ZeroDivisionError("division of polynomial by zero")
        return Polynomial(Fraction(c, d) for c in self.coeffs)

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    @classmethod
    def linear_power_sum(cls, weights: Iterable[int], offset: int, scale: int) -> "Polynomial":
        """``sum_k weights[k] * (offset + scale*z)**k`` expanded in ``z``."""
        weights = list(weights)
        out = [0] * max(len(weights), 1)
        for k, w in enumerate(weights):
            if not w:
                continue
            for i in range(k + 1):
                out[i] += w * comb(k, i) * scale**i * offset ** (k - i)
        return cls(out)

    def __str__(self) -> str:
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mono = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
            mag = abs(c)
            coef = str(mag) if (mag != 1 or k == 0) else ""
            body = f"{coef} {mono}".strip() if coef and mono else (coef or mono)
            terms.append(("-" if c < 0 else "+", body))
        if not terms:
            return "0"
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out
