"""Report documents (JSON with decimal-string numbers) and the matrix file format."""

from __future__ import annotations

import json
import re
from fractions import Fraction
from pathlib import Path
from typing import Any

from .census import RankNullityCensus
from .gf2 import GF2Matrix
from .lasvergnas import ConjectureReport, ParityVerdict, QPolynomial
from .matroid import BinaryMatroid
from .search import ScanReport, SearchSummary
from .tutte import TuttePolynomial


class MatrixParseError(ValueError):
    def __init__(self, path: str, line: int, message: str):
        super().__init__(f"{path}:{line}: {message}")
        self.path = path
        self.line = line


_RATIONAL = re.compile(r"-?\d+(?:/\d+)?")


def parse_rational(text: str) -> Fraction:
    """Parse ``p`` or ``p/q``; decimals are rejected."""
    if not _RATIONAL.fullmatch(text.strip()):
        raise ValueError(f"not an exact rational (use p or p/q): {text!r}")
    return Fraction(text.strip())


# -- matrix files -----------------------------------------------------


def parse_matrix_text(text: str, path: str = "<string>") -> BinaryMatroid:
    """Parse ``r n [reduced|full]`` followed by ``r`` rows of 0/1 characters."""
    header = None
    body: list[tuple[int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.rstrip()
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        if header is None:
            header = (lineno, line.split())
        else:
            body.append((lineno, line.strip()))
    if header is None:
        raise MatrixParseError(path, 1, "missing header 'r n [reduced|full]'")
    hline, fields = header
    if len(fields) not in (2, 3) or not all(f.isdigit() for f in fields[:2]):
        raise MatrixParseError(path, hline, "header must be 'r n [reduced|full]'")
    r, n = int(fields[0]), int(fields[1])
    kind = fields[2] if len(fields) == 3 else "full"
    if kind not in ("reduced", "full"):
        raise MatrixParseError(path, hline, f"unknown matrix kind {kind!r}")
    if len(body) != r:
        where = body[r][0] if len(body) > r else (body[-1][0] if body else hline)
        raise MatrixParseError(path, where, f"expected {r} rows, found {len(body)}")
    width = n - r if kind == "reduced" else n
    if width < 0:
        raise MatrixParseError(path, hline, "reduced matrix needs r <= n")
    rows = []
    for lineno, line in body:
        if len(line) != width:
            raise MatrixParseError(path, lineno, f"expected {width} columns, found {len(line)}")
        if set(line) - {"0", "1"}:
            raise MatrixParseError(path, lineno, "rows may contain only 0 and 1")
        rows.append(line)
    m = GF2Matrix.from_strings(rows, width)
    return BinaryMatroid.from_reduced(m) if kind == "reduced" else BinaryMatroid.from_full(m)


def read_matrix_file(path: str | Path) -> BinaryMatroid:
    return parse_matrix_text(Path(path).read_text(), str(path))


def format_matrix_file(m: BinaryMatroid) -> str:
    lines = [f"{m.r} {m.n} full"] + m.rep.to_strings()
    return "\n".join(lines) + "\n"


# -- report documents -------------------------------------------------


def _s(x: Any) -> str:
    return str(x)


def matroid_summary(m: BinaryMatroid) -> dict:
    return {
        "r": _s(m.r),
        "n": _s(m.n),
        "loops": [_s(e) for e in m.loops()],
        "coloops": [_s(e) for e in m.coloops()],
    }


def tutte_triples(t: TuttePolynomial) -> list[list[str]]:
    return [[_s(i), _s(j), _s(c)] for i, j, c in t.terms()]


def census_table(c: RankNullityCensus) -> list[list[str]]:
    return [[_s(v) for v in row] for row in c.counts]


def q_triples(q: QPolynomial) -> list[list[str]]:
    """``(degree, numerator, denominator)`` from the leading term down."""
    out = []
    for k in range(q.poly.degree, -1, -1):
        c = Fraction(q.poly[k])
        if c:
            out.append([_s(k), _s(c.numerator), _s(c.denominator)])
    return out


def verdict_doc(z: int, v: ParityVerdict) -> dict:
    return {"z": _s(z), "kind": v.kind.value, "numerator": _s(v.value.numerator), "denominator": _s(v.value.denominator)}


def conjecture_doc(rep: ConjectureReport) -> dict:
    return {
        "t_minus1": _s(rep.q.t_minus1),
        "q_coefficients": q_triples(rep.q),
        "integer_coefficients": rep.integer_coefficients,
        "shortcut_used": rep.shortcut_used,
        "z_range": [_s(rep.z_range[0]), _s(rep.z_range[1])],
        "verdict": rep.verdict,
        "violations": [verdict_doc(z, v) for z, v in rep.violations],
    }


def search_doc(source: str, summary: SearchSummary) -> dict:
    cfg = summary.config
    results = []
    for res in summary.results:
        results.append(
            {
                "contract": sorted((_s(e) for e in res.minor.contract)),
                "delete": sorted((_s(e) for e in res.minor.delete)),
                "fingerprint": res.fingerprint,
                **conjecture_doc(res.report),
            }
        )
    return {
        "command": "search",
        "source": source,
        "config": {
            "mode": cfg.mode,
            "target_size": _s(cfg.target_size) if cfg.target_size is not None else "any",
            "target_rank": _s(cfg.target_rank) if cfg.target_rank is not None else "any",
            "seed": _s(cfg.seed),
            "samples": _s(cfg.samples),
            "dedup": cfg.dedup,
            "z_range": [_s(cfg.z_range[0]), _s(cfg.z_range[1])],
        },
        "drawn": _s(summary.drawn),
        "examined": _s(summary.examined),
        "distinct_censuses": _s(summary.distinct),
        "budget_exhausted": _s(len(summary.budget_exhausted)),
        "counterexamples": _s(len(summary.results)),
        "results": results,
    }


def scan_doc(scan: ScanReport) -> dict:
    return {
        "command": "scan",
        "max_n": _s(scan.max_n),
        "z_range": [_s(scan.z_range[0]), _s(scan.z_range[1])],
        "checked": _s(scan.checked),
        "distinct_censuses": _s(len(scan.distinct)),
        "deduped": _s(scan.deduped),
        "all_integer_coefficients": scan.all_integer_coefficients,
        "violations": [
            {"r": _s(e.r), "n": _s(e.n), "pattern": _s(e.pattern), "fingerprint": e.fingerprint, **conjecture_doc(e.report)}
            for e in scan.violations
        ],
    }


def _encode(obj: Any, indent: int) -> str:
    pad = "  " * (indent + 1)
    end = "  " * indent
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(k)}: {_encode(v, indent + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, list):
        if all(not isinstance(v, (dict, list)) for v in obj):
            return json.dumps(obj)
        return "[\n" + ",\n".join(pad + _encode(v, indent + 1) for v in obj) + "\n" + end + "]"
    return json.dumps(obj)


def dumps(doc: dict) -> str:
    """JSON with stable key order; scalar-only lists stay on one line."""
    return _encode(doc, 0) + "\n"
