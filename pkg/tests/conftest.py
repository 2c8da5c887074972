from __future__ import annotations

import random

from tutte_forge.gf2 import GF2Matrix
from tutte_forge.matroid import BinaryMatroid


def random_matroid(rng: random.Random, max_n: int = 12, min_n: int = 1) -> BinaryMatroid:
    """Random ``[I_r | D]`` with varied density so loops, coloops and parallels all show up."""
    n = rng.randint(min_n, max_n)
    r = rng.randint(0, n)
    q = n - r
    density = rng.choice([0.2, 0.5, 0.8])
    rows = []
    for _ in range(r):
        row = 0
        for k in range(q):
            if rng.random() < density:
                row |= 1 << k
        rows.append(row)
    return BinaryMatroid.from_reduced(GF2Matrix(tuple(rows), q))


def random_suite(count: int, seed: int, max_n: int = 12, min_n: int = 1) -> list[BinaryMatroid]:
    rng = random.Random(seed)
    return [random_matroid(rng, max_n, min_n) for _ in range(count)]


def brute_rank(vectors) -> int:
    """Rank as log2 of the span size; no elimination involved."""
    span = {0}
    for v in vectors:
        span |= {x ^ v for x in span}
    return len(span).bit_length() - 1


ACCEPTANCE: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        label = report.nodeid.split("::")[-1]
        ACCEPTANCE[label] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label, status in sorted(ACCEPTANCE.items(), key=lambda kv: int(kv[0].split("_")[1][2:])):
        terminalreporter.write_line(f"{status}  {label}")
