from __future__ import annotations

from itertools import product

import pytest

from tutte_forge.catalog import circuit, elementary, golay24, paper_minor_N, paper_minor_Nprime
from tutte_forge.census import census
from tutte_forge.errors import SizeGuardError
from tutte_forge.lasvergnas import check_conjecture, check_theorem33
from tutte_forge.matroid import is_isomorphic
from tutte_forge.search import (
    SearchConfig,
    enumerate_minors,
    reduced_from_pattern,
    run_search,
    search_counterexamples,
    small_scan,
)
from tutte_forge.tutte import tutte_from_census

from conftest import random_suite


@pytest.fixture(scope="module")
def golay_sample():
    g = golay24()
    cfg = SearchConfig(target_size=18, mode="sampled", seed=1, samples=150, z_range=(-8, 8))
    return g, run_search(g, cfg)


class TestEnumerate:
    def test_triangle_two_elements(self):
        minors = list(enumerate_minors(circuit(3), SearchConfig(target_size=2)))
        assert len(minors) == 6
        deleted = [m for spec, m in minors if not spec.contract]
        contracted = [m for spec, m in minors if spec.contract]
        # deleting an edge of a triangle leaves two coloops; contracting one leaves a parallel pair
        assert all((m.r, m.n) == (2, 2) and len(m.coloops()) == 2 for m in deleted)
        assert all((m.r, m.n) == (1, 2) and m.columns == (1, 1) for m in contracted)
        assert len(deleted) == len(contracted) == 3

    def test_identity_minor(self):
        n = paper_minor_N()
        minors = list(enumerate_minors(n, SearchConfig(target_size=18)))
        assert len(minors) == 1
        spec, m = minors[0]
        assert not spec.contract and not spec.delete
        assert m == n

    def test_golay_rank6_minors_sampled(self):
        g = golay24()
        cfg = SearchConfig(target_size=18, target_rank=6, mode="sampled", seed=3, samples=5)
        minors = list(enumerate_minors(g, cfg))
        assert minors
        assert all((m.r, m.n) == (6, 18) and len(spec.contract) == 6 for spec, m in minors)

    def test_contract_sets_independent(self):
        for m in random_suite(10, seed=51, max_n=7):
            for spec, _ in enumerate_minors(m, SearchConfig()):
                assert m.rank_of_subset(spec.contract) == len(spec.contract)

    def test_normalization_sound(self):
        for m in random_suite(12, seed=52, max_n=7, min_n=2):
            normalized = {census(minor).fingerprint() for _, minor in enumerate_minors(m, SearchConfig())}
            brute = set()
            for assignment in product((0, 1, 2), repeat=m.n):
                c = [j for j, a in enumerate(assignment) if a == 1]
                d = [j for j, a in enumerate(assignment) if a == 2]
                brute.add(census(m.minor(c, d)).fingerprint())
            assert normalized == brute

    def test_invalid_target(self):
        with pytest.raises(ValueError):
            list(enumerate_minors(circuit(3), SearchConfig(target_size=5)))


class TestSearch:
    def test_circuit5_clean(self):
        assert search_counterexamples(circuit(5), SearchConfig(mode="exhaustive")) == []

    def test_paper_n_identity(self):
        res = search_counterexamples(paper_minor_N(), SearchConfig(target_size=18, z_range=(-8, 8)))
        assert len(res) == 1
        assert not res[0].minor.contract and not res[0].minor.delete
        assert {-2, -1, 2} <= {z for z, _ in res[0].report.violations}

    def test_golay_sampled_finds_counterexamples(self, golay_sample):
        _, summary = golay_sample
        assert summary.results
        assert all(len(r.minor.contract) + len(r.minor.delete) == 6 for r in summary.results)

    def test_replay_and_theorem33(self, golay_sample):
        g, summary = golay_sample
        for res in summary.results:
            minor = g.minor(res.minor.contract, res.minor.delete)
            c = census(minor)
            assert c.fingerprint() == res.fingerprint
            again = check_conjecture(minor, (-8, 8), c)
            assert again.q == res.report.q
            assert again.violations == res.report.violations
            assert check_theorem33(minor, tutte_from_census(c))

    def test_dedup_only_suppresses_repeats(self, golay_sample):
        g, summary = golay_sample
        cfg = SearchConfig(target_size=18, mode="sampled", seed=1, samples=150, z_range=(-8, 8), dedup=False)
        full = run_search(g, cfg)
        assert {r.fingerprint for r in full.results} == {r.fingerprint for r in summary.results}
        assert len(full.results) >= len(summary.results)

    def test_parallel_identical(self):
        g = golay24()
        base = SearchConfig(target_size=18, mode="sampled", seed=7, samples=40, z_range=(-8, 8))
        one = run_search(g, base)
        many = run_search(g, SearchConfig(**{**base.__dict__, "workers": 3}))
        assert [(r.minor, r.fingerprint) for r in one.results] == [(r.minor, r.fingerprint) for r in many.results]

    @pytest.mark.parametrize("rank, target", [(6, paper_minor_N), (9, paper_minor_Nprime)])
    def test_rediscovers_paper_minors_up_to_isomorphism(self, rank, target):
        g = golay24()
        cfg = SearchConfig(target_size=18, target_rank=rank, mode="sampled", seed=2, samples=60, z_range=(-8, 8))
        found = [g.minor(r.minor.contract, r.minor.delete) for r in search_counterexamples(g, cfg)]
        assert any(is_isomorphic(m, target()) for m in found)

    def test_budget_recorded_not_fatal(self):
        cfg = SearchConfig(target_size=18, census_budget=1000)
        summary = run_search(paper_minor_N(), cfg)
        assert len(summary.budget_exhausted) == 1
        assert summary.results == []


class TestSmallScan:
    def test_tiny_contains_elementary(self):
        scan = small_scan(3)
        fps = scan.fingerprints()
        for m in (elementary("loop"), elementary("coloop"), circuit(2), circuit(3), elementary("loop+coloop")):
            assert census(m).fingerprint() in fps

    def test_up_to_six(self):
        scan = small_scan(6)
        assert scan.violations == []
        assert scan.all_integer_coefficients
        assert scan.checked == sum(2 ** (r * (n - r)) for n in range(7) for r in range(n + 1))

    def test_pattern_roundtrip(self):
        scan = small_scan(4)
        for e in scan.distinct:
            m = reduced_from_pattern(e.r, e.n, e.pattern)
            assert census(m).fingerprint() == e.fingerprint

    def test_guard(self):
        with pytest.raises(SizeGuardError):
            small_scan(11)
