"""Named binary matroids: the two 18-element Golay minors, the Golay matroid, M(K_k), small fixtures."""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from itertools import combinations

from .errors import TutteForgeError, VerificationError
from .gf2 import GF2Matrix, kernel_basis, popcount, rank, row_space_equal, span
from .matroid import BinaryMatroid

# Reduced representations D (the matroid is [I | D]), labels 0..n-1 with identity columns first.
MINOR_N_ROWS = (
    "110010001111",
    "101100011011",
    "010011111100",
    "101011101010",
    "011100101110",
    "011010110011",
)

MINOR_NPRIME_ROWS = (
    "000111111",
    "011100111",
    "001001011",
    "110010011",
    "111001110",
    "110101011",
    "101010111",
    "010011110",
    "101111010",
)

GOLAY_WEIGHT_ENUMERATOR = {0: 1, 8: 759, 12: 2576, 16: 759, 24: 1}

_QUADRATIC_RESIDUES_11 = frozenset((k * k) % 11 for k in range(1, 11))


class UnknownFixtureError(TutteForgeError, KeyError):
    pass


@dataclass(frozen=True)
class Fixture:
    name: str
    matroid: BinaryMatroid
    provenance: str


def paper_minor_N() -> BinaryMatroid:
    return BinaryMatroid.from_reduced(GF2Matrix.from_strings(MINOR_N_ROWS))


def paper_minor_Nprime() -> BinaryMatroid:
    return BinaryMatroid.from_reduced(GF2Matrix.from_strings(MINOR_NPRIME_ROWS))


def golay_gates(m: BinaryMatroid) -> dict[str, bool]:
    """The five checks that pin a [24,12,8] self-dual code up to equivalence."""
    words = span(m.rep)
    dist = Counter(popcount(w) for w in words)
    nonzero = [w for w in dist if w]
    return {
        "length": m.n == 24,
        "dimension": rank(m.rep) == 12,
        "minimum_weight": bool(nonzero) and min(nonzero) == 8,
        "self_dual": row_space_equal(m.rep, kernel_basis(m.rep)),
        "weight_enumerator": dict(dist) == GOLAY_WEIGHT_ENUMERATOR,
    }


def golay24() -> BinaryMatroid:
    """Extended binary Golay code matroid as ``[I_12 | B]``.

    ``B`` borders the 11x11 circulant whose first row marks ``{0}`` and the
    quadratic residues mod 11 with an all-ones row and column and a zero corner.
    """
    rows = []
    for i in range(11):
        rows.append("".join("1" if (j - i) % 11 in _QUADRATIC_RESIDUES_11 | {0} else "0" for j in range(11)) + "1")
    rows.append("1" * 11 + "0")
    m = BinaryMatroid.from_reduced(GF2Matrix.from_strings(rows))
    failed = [name for name, ok in golay_gates(m).items() if not ok]
    if failed:
        raise VerificationError(f"Golay construction failed gates: {failed}")
    return m


def graphic_complete(k: int) -> BinaryMatroid:
    """M(K_k) from the vertex-edge incidence matrix; edges labelled ``(u, v)`` with ``u < v``."""
    if not 2 <= k <= 8:
        raise ValueError(f"K_k supported for 2 <= k <= 8, got {k}")
    edges = list(combinations(range(k), 2))
    rows = []
    for v in range(k):
        row = 0
        for j, (a, b) in enumerate(edges):
            if v in (a, b):
                row |= 1 << j
        rows.append(row)
    return BinaryMatroid.from_full(GF2Matrix(tuple(rows), len(edges)), edges)


def circuit(c: int) -> BinaryMatroid:
    """The rank ``c-1`` circuit on ``c`` elements."""
    if c < 1:
        raise ValueError("circuit needs at least one element")
    d = GF2Matrix(tuple(1 for _ in range(c - 1)), 1)
    return BinaryMatroid.from_reduced(d)


def elementary(name: str) -> BinaryMatroid:
    if name == "loop":
        return BinaryMatroid(GF2Matrix((), 1))
    if name == "coloop":
        return BinaryMatroid(GF2Matrix((1,), 1))
    if name in ("loop+coloop", "loop_coloop"):
        return BinaryMatroid(GF2Matrix((2,), 2))
    match = re.fullmatch(r"circuit\(?(\d+)\)?", name)
    if match and 3 <= int(match.group(1)) <= 8:
        return circuit(int(match.group(1)))
    raise UnknownFixtureError(name)


FIXTURE_NAMES = (
    ["paper-n", "paper-nprime", "golay24"]
    + [f"k{k}" for k in range(4, 9)]
    + ["loop", "coloop"]
    + [f"circuit{c}" for c in range(3, 9)]
)


def fixture(name: str) -> Fixture:
    if name == "paper-n":
        return Fixture(name, paper_minor_N(), "rank-6, 18-element minor of the Golay matroid (reduced rep, 6x12)")
    if name == "paper-nprime":
        return Fixture(name, paper_minor_Nprime(), "self-dual rank-9, 18-element minor of the Golay matroid (9x9)")
    if name == "golay24":
        return Fixture(name, golay24(), "extended binary Golay code, bordered QR-circulant construction")
    match = re.fullmatch(r"k(\d+)", name)
    if match and 4 <= int(match.group(1)) <= 8:
        return Fixture(name, graphic_complete(int(match.group(1))), "graphic matroid of the complete graph")
    if name in ("loop", "coloop"):
        return Fixture(name, elementary(name), "elementary")
    match = re.fullmatch(r"circuit(\d+)", name)
    if match and 3 <= int(match.group(1)) <= 8:
        return Fixture(name, circuit(int(match.group(1))), "elementary")
    raise UnknownFixtureError(name)
