"""Minor enumeration, counterexample search, and the small exhaustive scan."""

from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator

from .census import RankNullityCensus, census, reduced_censuses
from .errors import SizeGuardError
from .gf2 import GF2Matrix, rank_of_rows
from .lasvergnas import DEFAULT_Z_RANGE, ConjectureReport, conjecture_report, q_from_census
from .matroid import BinaryMatroid, MinorSpec

MAX_SCAN_N = 10


@dataclass(frozen=True)
class SearchConfig:
    target_size: int | tuple[int, int] | None = None
    target_rank: int | None = None
    z_range: tuple[int, int] = DEFAULT_Z_RANGE
    census_budget: int = 1 << 26  # DFS nodes per minor
    dedup: bool = True
    workers: int = 1
    seed: int = 0
    mode: str = "exhaustive"
    samples: int = 10_000

    def sizes(self, n: int) -> range:
        if self.target_size is None:
            lo, hi = 0, n
        elif isinstance(self.target_size, int):
            lo = hi = self.target_size
        else:
            lo, hi = self.target_size
        if lo < 0 or hi > n or lo > hi:
            raise ValueError(f"target size {self.target_size} invalid for a {n}-element matroid")
        return range(lo, hi + 1)

    def validate(self, m: BinaryMatroid) -> None:
        self.sizes(m.n)
        if self.mode not in ("exhaustive", "sampled"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.census_budget <= 0 or self.samples <= 0 or self.workers <= 0:
            raise ValueError("budgets and worker count must be positive")
        lo, hi = self.z_range
        if lo > hi:
            raise ValueError(f"empty z range [{lo}, {hi}]")


@dataclass(frozen=True)
class SearchResult:
    minor: MinorSpec
    report: ConjectureReport
    fingerprint: str


@dataclass
class SearchSummary:
    source_n: int
    config: SearchConfig
    drawn: int = 0
    examined: int = 0
    distinct: int = 0
    budget_exhausted: list[MinorSpec] = field(default_factory=list)
    results: list[SearchResult] = field(default_factory=list)


def _independent(m: BinaryMatroid, idx: tuple[int, ...]) -> bool:
    cols = m.columns
    return rank_of_rows(cols[j] for j in idx) == len(idx)


def _spec(m: BinaryMatroid, contract: tuple[int, ...], delete: tuple[int, ...]) -> MinorSpec:
    return MinorSpec(frozenset(m.labels[j] for j in contract), frozenset(m.labels[j] for j in delete))


def _exhaustive_specs(m: BinaryMatroid, cfg: SearchConfig) -> Iterator[MinorSpec]:
    n = m.n
    for size in cfg.sizes(n):
        for removed in combinations(range(n), n - size):
            for k in range(len(removed) + 1):
                if cfg.target_rank is not None and k != m.r - cfg.target_rank:
                    continue
                for contract in combinations(removed, k):
                    if not _independent(m, contract):
                        continue
                    delete = tuple(j for j in removed if j not in contract)
                    yield _spec(m, contract, delete)


def _sampled_specs(m: BinaryMatroid, cfg: SearchConfig) -> Iterator[MinorSpec]:
    rng = random.Random(cfg.seed)
    sizes = list(cfg.sizes(m.n))
    for _ in range(cfg.samples):
        size = rng.choice(sizes)
        removed = sorted(rng.sample(range(m.n), m.n - size))
        # rejection sampling: uniform over independent contract sets within `removed`
        for _attempt in range(1000):
            if cfg.target_rank is not None:
                k = m.r - cfg.target_rank
                if not 0 <= k <= len(removed):
                    return
                contract = tuple(sorted(rng.sample(removed, k)))
            else:
                contract = tuple(j for j in removed if rng.getrandbits(1))
            if _independent(m, contract):
                break
        else:
            continue
        delete = tuple(j for j in removed if j not in contract)
        yield _spec(m, contract, delete)


def minor_specs(m: BinaryMatroid, cfg: SearchConfig) -> Iterator[MinorSpec]:
    cfg.validate(m)
    if cfg.mode == "exhaustive":
        return _exhaustive_specs(m, cfg)
    return _sampled_specs(m, cfg)


def enumerate_minors(m: BinaryMatroid, cfg: SearchConfig) -> Iterator[tuple[MinorSpec, BinaryMatroid]]:
    """Yield ``(spec, m/C\\D)`` with contract sets restricted to independent sets."""
    for spec in minor_specs(m, cfg):
        yield spec, m.minor(spec.contract, spec.delete)


def _order_key(m: BinaryMatroid, spec: MinorSpec) -> tuple:
    c = sorted(m.indices(spec.contract))
    d = sorted(m.indices(spec.delete))
    return (len(c), c, d)


def _examine(m: BinaryMatroid, spec: MinorSpec, cfg: SearchConfig) -> tuple[MinorSpec, RankNullityCensus | None]:
    minor = m.minor(spec.contract, spec.delete)
    if (1 << (minor.n + 1)) - 1 > cfg.census_budget:
        return spec, None
    return spec, census(minor, workers=1)


def run_search(m: BinaryMatroid, cfg: SearchConfig) -> SearchSummary:
    drawn = list(minor_specs(m, cfg))
    specs = list(dict.fromkeys(drawn))
    if cfg.workers > 1:
        with ThreadPoolExecutor(max_workers=cfg.workers) as pool:
            examined = list(pool.map(lambda s: _examine(m, s, cfg), specs))
    else:
        examined = [_examine(m, s, cfg) for s in specs]

    summary = SearchSummary(m.n, cfg, drawn=len(drawn), examined=len(examined))
    ordered = sorted(examined, key=lambda item: _order_key(m, item[0]))
    verdicts: dict[str, ConjectureReport] = {}
    reported: set[str] = set()
    for spec, c in ordered:
        if c is None:
            summary.budget_exhausted.append(spec)
            continue
        fp = c.fingerprint()
        report = verdicts.get(fp)
        if report is None:
            report = conjecture_report(q_from_census(c), cfg.z_range)
            verdicts[fp] = report
        if report.holds:
            continue
        if cfg.dedup and fp in reported:
            continue
        reported.add(fp)
        summary.results.append(SearchResult(spec, report, fp))
    summary.distinct = len(verdicts)
    return summary


def search_counterexamples(m: BinaryMatroid, cfg: SearchConfig) -> list[SearchResult]:
    return run_search(m, cfg).results


# -- small exhaustive scan --------------------------------------------


def reduced_from_pattern(r: int, n: int, pattern: int) -> BinaryMatroid:
    q = n - r
    rows = tuple((pattern >> (i * q)) & ((1 << q) - 1) for i in range(r))
    return BinaryMatroid.from_reduced(GF2Matrix(rows, q))


@dataclass(frozen=True)
class ScanEntry:
    r: int
    n: int
    pattern: int
    fingerprint: str
    report: ConjectureReport


@dataclass
class ScanReport:
    max_n: int
    z_range: tuple[int, int]
    checked: int = 0
    distinct: list[ScanEntry] = field(default_factory=list)
    violations: list[ScanEntry] = field(default_factory=list)

    @property
    def deduped(self) -> int:
        return self.checked - len(self.distinct)

    @property
    def all_integer_coefficients(self) -> bool:
        return all(e.report.integer_coefficients for e in self.distinct)

    def fingerprints(self) -> set[str]:
        return {e.fingerprint for e in self.distinct}


def small_scan(max_n: int, z_range: tuple[int, int] = DEFAULT_Z_RANGE) -> ScanReport:
    """Check every reduced representation ``[I_r | D]`` with at most ``max_n`` columns."""
    if max_n > MAX_SCAN_N:
        raise SizeGuardError(f"small scan refused for max_n={max_n} > {MAX_SCAN_N}")
    if max_n < 0:
        raise ValueError("max_n must be nonnegative")
    out = ScanReport(max_n, z_range)
    seen: set[str] = set()
    for n in range(max_n + 1):
        for r in range(n + 1):
            out.checked += 1 << (r * (n - r))
            for pattern, arr in reduced_censuses(r, n):
                c = RankNullityCensus(tuple(tuple(int(v) for v in row) for row in arr), r, n)
                fp = c.fingerprint()
                if fp in seen:
                    continue
                seen.add(fp)
                entry = ScanEntry(r, n, pattern, fp, conjecture_report(q_from_census(c), z_range))
                out.distinct.append(entry)
                if not entry.report.holds:
                    out.violations.append(entry)
    return out
