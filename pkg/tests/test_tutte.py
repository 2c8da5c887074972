from __future__ import annotations

from fractions import Fraction

import pytest

from tutte_forge.catalog import circuit, elementary, graphic_complete, paper_minor_N
from tutte_forge.census import census, census_bruteforce, census_with_nodes
from tutte_forge.errors import BudgetExceededError, SizeGuardError
from tutte_forge.gf2 import GF2Matrix, rank_of_rows
from tutte_forge.matroid import BinaryMatroid
from tutte_forge.polynomial import Polynomial
from tutte_forge.tutte import TuttePolynomial, diagonal_poly, evaluate, tutte_delcon, tutte_from_census

from conftest import random_suite

# coefficient of x^i y^j in the displayed T_N
PAPER_TN = {
    (0, 12): 1, (0, 11): 6, (0, 10): 21, (0, 9): 56, (0, 8): 126, (0, 7): 252,
    (6, 0): 1, (1, 5): 45, (0, 6): 462, (5, 0): 12, (4, 1): 6, (1, 4): 225,
    (0, 5): 747, (4, 0): 72, (3, 1): 111, (2, 2): 240, (1, 3): 675, (0, 4): 1017,
    (3, 0): 247, (2, 1): 591, (1, 2): 1095, (0, 3): 1057, (2, 0): 417, (1, 1): 909,
    (0, 2): 723, (1, 0): 231, (0, 1): 231,
}


@pytest.fixture(scope="module")
def census_n():
    return census(paper_minor_N())


def subset_counts(m: BinaryMatroid) -> tuple[int, int, int]:
    """(independent, spanning, bases) by enumeration of all subsets."""
    cols = m.columns
    ind = span = bases = 0
    for mask in range(1 << m.n):
        sub = [cols[j] for j in range(m.n) if (mask >> j) & 1]
        rk = rank_of_rows(sub)
        ind += rk == len(sub)
        span += rk == m.r
        bases += rk == len(sub) == m.r
    return ind, span, bases


class TestCensus:
    def test_loop(self):
        c = census(elementary("loop"))
        assert c.counts == ((1, 1),)

    def test_coloop(self):
        c = census(elementary("coloop"))
        assert c[1, 0] == 1 and c[0, 0] == 1

    def test_total_for_n(self, census_n):
        assert census_n.total == 262144

    def test_matches_bruteforce(self):
        for m in random_suite(40, seed=31, max_n=11):
            assert census(m) == census_bruteforce(m)

    def test_node_count(self):
        for m in random_suite(10, seed=32, max_n=12) + [paper_minor_N()]:
            for workers, split in ((1, None), (1, 3), (3, None), (2, 1)):
                c, nodes = census_with_nodes(m, workers=workers, split=split)
                assert nodes == 2 ** (m.n + 1) - 1
                assert c == census(m)

    def test_guard(self):
        big = BinaryMatroid.from_reduced(GF2Matrix.zeros(1, 30))
        with pytest.raises(SizeGuardError):
            census(big)

    def test_full_set_counted(self):
        for m in random_suite(10, seed=33, max_n=10):
            c = census(m)
            assert c[0, m.n - m.r] >= 1
            assert c[m.r, 0] >= 1  # the empty set


class TestTuttePolynomial:
    def test_loop_coloop(self):
        assert tutte_from_census(census(elementary("loop"))).terms() == [(0, 1, 1)]
        assert tutte_from_census(census(elementary("coloop"))).terms() == [(1, 0, 1)]

    def test_triangle(self):
        # hand recurrence: T(C3) = x^2 + x + y
        t = tutte_from_census(census(circuit(3)))
        assert t.terms() == [(0, 1, 1), (1, 0, 1), (2, 0, 1)]
        assert tutte_delcon(circuit(3)) == t

    def test_four_circuit(self):
        t = tutte_from_census(census(elementary("circuit(4)")))
        assert t.terms() == [(0, 1, 1), (1, 0, 1), (2, 0, 1), (3, 0, 1)]

    def test_paper_polynomial(self, census_n):
        t = tutte_from_census(census_n)
        assert {(i, j): c for i, j, c in t.terms()} == PAPER_TN

    def test_paper_polynomial_plain_text(self, census_n):
        text = str(tutte_from_census(census_n))
        assert text.startswith("y^12 + 6 y^11 + 21 y^10")
        assert text.endswith("417 x^2 + 909 x y + 723 y^2 + 231 x + 231 y")

    def test_delcon_on_n(self, census_n):
        assert tutte_delcon(paper_minor_N()) == tutte_from_census(census_n)

    def test_delcon_k4(self):
        assert evaluate(tutte_delcon(graphic_complete(4)), 1, 1) == 16

    def test_delcon_budget(self):
        with pytest.raises(BudgetExceededError):
            tutte_delcon(paper_minor_N(), budget=10)

    def test_census_vs_delcon(self):
        for m in random_suite(60, seed=34, max_n=12):
            assert tutte_delcon(m) == tutte_from_census(census(m))

    def test_duality_transposes(self):
        for m in random_suite(40, seed=35, max_n=12):
            assert tutte_from_census(census(m.dual())) == tutte_from_census(census(m)).transpose()

    def test_counting_identities(self):
        for m in random_suite(40, seed=36, max_n=11):
            t = tutte_from_census(census(m))
            ind, spanning, bases = subset_counts(m)
            assert evaluate(t, 1, 1) == bases == m.count_bases_bruteforce()
            assert evaluate(t, 2, 1) == ind
            assert evaluate(t, 1, 2) == spanning
            assert evaluate(t, 2, 2) == 2**m.n

    def test_nonnegative(self):
        for m in random_suite(30, seed=37, max_n=12):
            t = tutte_from_census(census(m))
            assert all(c >= 0 for row in t.coeffs for c in row)


class TestEvaluate:
    def test_n_special_values(self, census_n):
        t = tutte_from_census(census_n)
        assert evaluate(t, -1, -1) == 64
        assert evaluate(t, 2, 2) == 262144
        assert evaluate(t, 1, 1) == paper_minor_N().count_bases_bruteforce()

    def test_rational(self):
        t = TuttePolynomial(((0, 1), (1, 0)))  # x + y
        assert evaluate(t, Fraction(1, 2), Fraction(1, 3)) == Fraction(5, 6)


class TestDiagonal:
    def test_coloop(self):
        assert diagonal_poly(census(elementary("coloop")), -2, 4) == Polynomial([-1, 4])

    def test_n_constant_and_leading(self, census_n):
        p = diagonal_poly(census_n, -2, 4)
        assert p(0) == 64
        assert p.degree == 12
        assert p[12] == 2**24 == 64 * 262144

    def test_agrees_with_evaluation(self):
        for m in random_suite(30, seed=38, max_n=10):
            c = census(m)
            p = diagonal_poly(c, -2, 4)
            t = tutte_from_census(c)
            for z in range(-4, 5):
                assert p(z) == evaluate(t, -1 + 4 * z, -1 + 4 * z)
