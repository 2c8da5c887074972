"""Exact Tutte polynomials of binary matroids and the odd-integer quotient test."""

from .catalog import elementary, golay24, graphic_complete, paper_minor_N, paper_minor_Nprime
from .census import RankNullityCensus, census
from .errors import (
    BudgetExceededError,
    SizeGuardError,
    TutteForgeError,
    UnknownElementError,
    VerificationError,
)
from .gf2 import GF2Matrix, kernel_basis, rank, row_space_equal, rref, sum_dim
from .lasvergnas import (
    ConjectureReport,
    Parity,
    ParityVerdict,
    QPolynomial,
    bicycle_dimension,
    check_conjecture,
    check_rosenstiehl,
    check_theorem33,
    parity_at,
    q_polynomial,
)
from .matroid import BinaryMatroid, MinorSpec, is_isomorphic
from .polynomial import Polynomial
from .search import SearchConfig, enumerate_minors, search_counterexamples, small_scan
from .tutte import TuttePolynomial, diagonal_poly, evaluate, tutte, tutte_delcon, tutte_from_census

__version__ = "0.1.0"
