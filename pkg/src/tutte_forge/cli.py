"""Command-line front end: ``tutte``, ``lv``, ``search``, ``scan``."""

from __future__ import annotations

import argparse
import logging
import sys
import time
from pathlib import Path

from . import catalog
from .census import census, default_workers
from .errors import BudgetExceededError, SizeGuardError, TutteForgeError, VerificationError
from .lasvergnas import (
    DEFAULT_Z_RANGE,
    bicycle_dimension,
    check_rosenstiehl,
    check_theorem33,
    conjecture_report,
    q_from_census,
)
from .matroid import BinaryMatroid
from .report import (
    MatrixParseError,
    census_table,
    conjecture_doc,
    dumps,
    format_matrix_file,
    matroid_summary,
    parse_rational,
    read_matrix_file,
    scan_doc,
    search_doc,
    tutte_triples,
)
from .search import SearchConfig, run_search, small_scan
from .tutte import evaluate, tutte_delcon, tutte_from_census

log = logging.getLogger("tutte_forge")

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_GUARD = 2
EXIT_VERIFY = 3
EXIT_NO_RESULTS = 4

DELCON_MAX_N = 18


class UsageError(TutteForgeError):
    pass


def resolve_input(spec: str) -> BinaryMatroid:
    if spec in catalog.FIXTURE_NAMES:
        return catalog.fixture(spec).matroid
    path = Path(spec)
    if path.exists():
        return read_matrix_file(path)
    raise UsageError(f"{spec!r} is neither a fixture ({', '.join(catalog.FIXTURE_NAMES)}) nor a readable file")


def _z_range(values: list[int] | None) -> tuple[int, int]:
    if values is None:
        return DEFAULT_Z_RANGE
    lo, hi = values
    if lo > hi:
        raise UsageError(f"--z-range needs a <= b, got {lo} {hi}")
    return lo, hi


def _fmt_frac(v) -> str:
    return str(v)


def _emit(doc: dict, out) -> None:
    out.write(dumps(doc))


def _maybe_dump(args, m: BinaryMatroid) -> None:
    if getattr(args, "dump_matrix", None):
        Path(args.dump_matrix).write_text(format_matrix_file(m))


def cmd_tutte(args, out) -> int:
    m = resolve_input(args.input)
    _maybe_dump(args, m)
    timings = {}
    t0 = time.perf_counter()
    c = census(m, args.workers)
    t = tutte_from_census(c)
    timings["census"] = time.perf_counter() - t0
    if args.verify_delcon:
        if m.n > DELCON_MAX_N:
            raise SizeGuardError(f"--verify-delcon allowed only for n <= {DELCON_MAX_N}")
        t0 = time.perf_counter()
        if tutte_delcon(m) != t:
            raise VerificationError("census and deletion-contraction Tutte polynomials differ")
        timings["delcon"] = time.perf_counter() - t0
    evaluations = []
    if args.eval:
        x, y = (parse_rational(v) for v in args.eval)
        evaluations.append({"x": str(x), "y": str(y), "value": _fmt_frac(evaluate(t, x, y))})
    if args.format == "plain":
        out.write(f"# {args.input}: r={m.r} n={m.n}\n")
        out.write(f"T(x,y) = {t}\n")
        for e in evaluations:
            out.write(f"T({e['x']},{e['y']}) = {e['value']}\n")
        if args.verify_delcon:
            out.write("deletion-contraction: agrees\n")
    else:
        doc = {
            "command": "tutte",
            "input": args.input,
            "matroid": matroid_summary(m),
            "census_fingerprint": c.fingerprint(),
            "census": census_table(c),
            "tutte": tutte_triples(t),
            "evaluations": evaluations,
            "delcon_verified": bool(args.verify_delcon),
        }
        if args.timings:
            doc["timings"] = {k: f"{v:.3f}" for k, v in timings.items()}
        _emit(doc, out)
    return EXIT_OK


def cmd_lv(args, out) -> int:
    m = resolve_input(args.input)
    _maybe_dump(args, m)
    z_range = _z_range(args.z_range)
    t0 = time.perf_counter()
    c = census(m, args.workers)
    t = tutte_from_census(c)
    elapsed = time.perf_counter() - t0
    rosenstiehl = check_rosenstiehl(m, t)
    theorem33 = check_theorem33(m, t)
    if not (rosenstiehl and theorem33):
        raise VerificationError(f"identity check failed: rosenstiehl={rosenstiehl} theorem33={theorem33}")
    rep = conjecture_report(q_from_census(c), z_range, args.input)
    if args.format == "plain":
        out.write(f"# {args.input}: r={m.r} n={m.n} bicycle_dimension={bicycle_dimension(m)}\n")
        out.write(f"T(-1,-1) = {rep.q.t_minus1}\n")
        out.write(f"Q(z) = {rep.q.poly}\n")
        out.write(f"verdict: {rep.verdict}\n")
        for z, v in rep.violations:
            out.write(f"  z={z}: {v.kind.value} {v.value}\n")
    else:
        doc = {
            "command": "lv",
            "input": args.input,
            "matroid": matroid_summary(m),
            "census_fingerprint": c.fingerprint(),
            "tutte": tutte_triples(t),
            "evaluations": [
                {"x": "-1", "y": "-1", "value": str(evaluate(t, -1, -1))},
                {"x": "3", "y": "3", "value": str(evaluate(t, 3, 3))},
            ],
            "bicycle_dimension": str(bicycle_dimension(m)),
            "rosenstiehl_check": rosenstiehl,
            "theorem33_check": theorem33,
            **conjecture_doc(rep),
        }
        if args.timings:
            doc["timings"] = {"census": f"{elapsed:.3f}"}
        _emit(doc, out)
    return EXIT_OK


def cmd_search(args, out) -> int:
    m = resolve_input(args.source)
    mode = args.mode or ("exhaustive" if m.n <= 12 else "sampled")
    cfg = SearchConfig(
        target_size=args.target_size,
        target_rank=args.target_rank,
        z_range=_z_range(args.z_range),
        dedup=not args.no_dedup,
        workers=args.workers,
        seed=args.seed,
        mode=mode,
        samples=args.samples,
    )
    try:
        summary = run_search(m, cfg)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.format == "plain":
        out.write(f"# search {args.source}: mode={mode} examined={summary.examined} "
                  f"counterexamples={len(summary.results)}\n")
        for res in summary.results:
            c = sorted(map(str, res.minor.contract))
            d = sorted(map(str, res.minor.delete))
            zs = ",".join(str(z) for z, _ in res.report.violations)
            out.write(f"C={{{','.join(c)}}} D={{{','.join(d)}}} fingerprint={res.fingerprint} violations z={zs}\n")
    else:
        _emit(search_doc(args.source, summary), out)
    if mode == "exhaustive" and not summary.results:
        return EXIT_NO_RESULTS
    return EXIT_OK


def cmd_scan(args, out) -> int:
    scan = small_scan(args.max_n, _z_range(args.z_range))
    if args.format == "plain":
        out.write(
            f"checked={scan.checked} distinct={len(scan.distinct)} deduped={scan.deduped} "
            f"violations={len(scan.violations)} all_integer_coefficients={scan.all_integer_coefficients}\n"
        )
    else:
        _emit(scan_doc(scan), out)
    return EXIT_OK


def cmd_fixtures(args, out) -> int:
    for name in catalog.FIXTURE_NAMES:
        out.write(name + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tutte-forge", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true", help="diagnostics on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_input=True):
        if with_input:
            p.add_argument("input", help="fixture name or matrix file")
            p.add_argument("--dump-matrix", metavar="PATH", help="write the matroid as a matrix file")
        p.add_argument("--format", choices=("json", "plain"), default="json")
        p.add_argument("--workers", type=int, default=default_workers())
        p.add_argument("--timings", action="store_true", help="include wall-clock timings in the report")

    p = sub.add_parser("tutte", help="Tutte polynomial via the rank-nullity census")
    common(p)
    p.add_argument("--verify-delcon", action="store_true", help=f"cross-check by deletion-contraction (n <= {DELCON_MAX_N})")
    p.add_argument("--eval", nargs=2, metavar=("X", "Y"), help="exact evaluation; accepts p/q")
    p.set_defaults(func=cmd_tutte)

    p = sub.add_parser("lv", help="check T(-1+4z,-1+4z)/T(-1,-1) for odd integer values")
    common(p)
    p.add_argument("--z-range", nargs=2, type=int, metavar=("A", "B"))
    p.set_defaults(func=cmd_lv)

    p = sub.add_parser("search", help="hunt for counterexample minors")
    p.add_argument("source", help="fixture name or matrix file")
    common(p, with_input=False)
    p.add_argument("--target-size", type=int)
    p.add_argument("--target-rank", type=int)
    p.add_argument("--mode", choices=("exhaustive", "sampled"))
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--samples", type=int, default=10_000)
    p.add_argument("--no-dedup", action="store_true")
    p.add_argument("--z-range", nargs=2, type=int, metavar=("A", "B"))
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("scan", help="exhaustive check of all small reduced representations")
    common(p, with_input=False)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--z-range", nargs=2, type=int, metavar=("A", "B"))
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("fixtures", help="list fixture names")
    p.set_defaults(func=cmd_fixtures)
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr,
                        format="%(levelname)s %(message)s")
    try:
        return args.func(args, out)
    except (UsageError, MatrixParseError, catalog.UnknownFixtureError, ValueError) as exc:
        log.error("%s", exc)
        return EXIT_USAGE
    except (SizeGuardError, BudgetExceededError) as exc:
        log.error("%s", exc)
        return EXIT_GUARD
    except VerificationError as exc:
        log.error("verification failure: %s", exc)
        return EXIT_VERIFY


if __name__ == "__main__":
    sys.exit(main())
