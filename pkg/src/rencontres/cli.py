"""Command-line front end.

Exit codes: 0 everything checked out, 1 a mathematical failure (identity,
bound or b-file mismatch), 2 usage or parse error, 3 enumeration cap hit.
"""
from __future__ import annotations

import argparse
import sys
import time
from typing import Callable, Optional, Sequence

from . import bfile as bfile_mod
from . import bounds, combinat, oracle, report
from .identities import DomainError, UsageError
from .sweep import Bound, ParamRange, RunSummary, SweepSpec, expand_grid, parse_range, run_sweep

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3

SEQ_NAMES = ("derangement", "rencontres", "stirling1", "stirling2", "bell", "eulerian")
_ROW_SEQS: dict[str, tuple[Callable[[int, int], int], Callable[[int], int]]] = {
    "rencontres": (combinat.rencontres, lambda n: n + 1),
    "stirling1": (combinat.stirling1_signed, lambda n: n + 1),
    "stirling2": (combinat.stirling2, lambda n: n + 1),
    "eulerian": (combinat.eulerian, lambda n: max(n, 1)),
}
_SINGLE_SEQS: dict[str, Callable[[int], int]] = {
    "derangement": combinat.derangement,
    "bell": combinat.bell,
}


class CliUsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise CliUsageError(message)


def _emit(out, lines):
    for line in lines:
        print(line, file=out)


def _summary_line(s: RunSummary) -> str:
    line = f"{s.total} checks, {s.passes} passes, {s.failures} failures"
    if s.skipped:
        line += f", {s.skipped} skipped"
    return line + f" ({s.wall_time:.3f} s)"


def _summary_dict(s: RunSummary) -> dict:
    return {"total": s.total, "passes": s.passes, "failures": s.failures, "skipped": s.skipped}


# --- seq ----------------------------------------------------------------------


def run_seq(name: str, n: int, k: Optional[int], fmt: str, out) -> int:
    if name not in SEQ_NAMES:
        raise CliUsageError(f"unknown sequence {name!r}; choose from {', '.join(SEQ_NAMES)}")
    if n < 0 or (k is not None and k < 0):
        raise CliUsageError("--n and --k must be natural numbers")
    if name in _SINGLE_SEQS:
        if k is not None:
            raise CliUsageError(f"{name} takes no --k")
        value = _SINGLE_SEQS[name](n)
        if fmt == "json":
            print(report.dumps({"sequence": name, "n": n, "value": str(value)}), file=out)
        elif fmt == "csv":
            _emit(out, ["n,value", f"{n},{value}"])
        else:
            print(value, file=out)
        return EXIT_OK

    f, width = _ROW_SEQS[name]
    if k is not None:
        value = f(n, k)
        if fmt == "json":
            print(report.dumps({"sequence": name, "n": n, "k": k, "value": str(value)}), file=out)
        elif fmt == "csv":
            _emit(out, ["k,value", f"{k},{value}"])
        else:
            print(value, file=out)
        return EXIT_OK

    row = [f(n, j) for j in range(width(n))]
    if fmt == "json":
        print(report.dumps({"sequence": name, "n": n, "row": [str(v) for v in row]}), file=out)
    elif fmt == "csv":
        _emit(out, ["k,value", *(f"{j},{v}" for j, v in enumerate(row))])
    else:
        print(" ".join(str(v) for v in row), file=out)
    return EXIT_OK


# --- verify -------------------------------------------------------------------


def run_verify(spec: SweepSpec, fmt: str, out) -> RunSummary:
    reports, summary = run_sweep(spec)
    if fmt == "json":
        for r in reports:
            print(report.identity_json(r), file=out)
        print(report.dumps({"summary": _summary_dict(summary)}), file=out)
    elif fmt == "csv":
        _emit(out, report.identity_csv(reports))
    else:
        for r in reports:
            print(report.identity_plain(r), file=out)
        print(_summary_line(summary), file=out)
    return summary


# --- oracle -------------------------------------------------------------------


def _closed_form(stat: oracle.StatisticId, n: int, q: Optional[int]) -> list[tuple[str, list[int]]]:
    S = oracle.StatisticId
    if stat is S.FIXED_POINTS:
        return [("rencontres", combinat.rencontres_row(n))]
    if stat is S.CYCLES:
        return [
            ("|stirling1|", [combinat.stirling1_unsigned(n, k) for k in range(n + 1)]),
            ("rising_factorial_poly", list(combinat.rising_factorial_poly(n))),
        ]
    if stat is S.PARTITION_BLOCKS:
        return [("stirling2", [combinat.stirling2(n, k) for k in range(n + 1)])]
    if stat is S.ASCENTS:
        return [("eulerian", [combinat.eulerian(n, j) for j in range(max(n, 1))])]
    return [("bell(q)*n!", [combinat.bell(q) * combinat.factorial(n)])]


def run_oracle(stat: str, n: int, q: Optional[int], compare: bool, fmt: str, out,
               permutation_ceiling: int = oracle.PERMUTATION_CEILING,
               partition_ceiling: int = oracle.PARTITION_CEILING) -> RunSummary:
    try:
        sid = oracle.StatisticId(stat.upper())
    except ValueError:
        raise CliUsageError(f"unknown statistic {stat!r}") from None
    if (q is None) == (sid is oracle.StatisticId.MARKED_TUPLES):
        raise CliUsageError("--q is required for MARKED_TUPLES and only for it")
    if compare and sid is oracle.StatisticId.MARKED_TUPLES and q > n:
        raise CliUsageError("MARKED_TUPLES comparison with bell(q)*n! needs q <= n")

    start = time.perf_counter()
    row = oracle.enumerate_statistic(
        sid, n, q, permutation_ceiling=permutation_ceiling, partition_ceiling=partition_ceiling
    )
    counts = list(row.counts)
    summary = RunSummary()
    diffs = []
    if compare:
        for label, expected in _closed_form(sid, n, q):
            width = max(len(expected), len(counts))
            exp = expected + [0] * (width - len(expected))
            got = counts + [0] * (width - len(counts))
            for v in range(width):
                ok = exp[v] == got[v]
                summary.record(ok, (label, v))
                if not ok:
                    diffs.append({"against": label, "value": v, "expected": str(exp[v]), "found": str(got[v])})
        if sid is oracle.StatisticId.PARTITION_BLOCKS:
            ok = row.total == combinat.bell(n)
            summary.record(ok, ("bell", n))
            if not ok:
                diffs.append({"against": "bell", "value": "total", "expected": str(combinat.bell(n)), "found": str(row.total)})
    summary.wall_time = time.perf_counter() - start

    if fmt == "json":
        d = {"statistic": sid.value, "n": n, "counts": [str(c) for c in counts]}
        if q is not None:
            d["q"] = q
        if compare:
            d["mismatches"] = diffs
            d["summary"] = _summary_dict(summary)
        print(report.dumps(d), file=out)
    elif fmt == "csv":
        _emit(out, ["value,count", *(f"{v},{c}" for v, c in enumerate(counts))])
    else:
        print(" ".join(str(c) for c in counts), file=out)
        for d in diffs:
            print(f"MISMATCH {d['against']} at {d['value']}: expected {d['expected']}, found {d['found']}", file=out)
        if compare:
            print(_summary_line(summary), file=out)
    return summary


# --- bounds -------------------------------------------------------------------

BOUND_PARAMS = {
    "adell": ("n", "m"),
    "lambda": ("r", "n"),
    "berend-tal": ("n",),
    "asymptotics": ("n",),
}


def run_bounds(which: str, range_text: str, fmt: str, out) -> RunSummary:
    if which not in BOUND_PARAMS:
        raise CliUsageError(f"unknown bound {which!r}; choose from {', '.join(BOUND_PARAMS)}")
    ranges = parse_range(range_text)
    names = [r.name for r in ranges]
    if which == "adell" and "m" not in names:
        ranges.append(ParamRange("m", interval=(Bound(0), Bound(0, "n"))))
        names.append("m")
    expected = set(BOUND_PARAMS[which])
    if set(names) != expected:
        raise CliUsageError(f"bounds {which} needs ranges for exactly: {', '.join(sorted(expected))}")
    points = list(expand_grid(ranges))
    if not points:
        raise CliUsageError("range expands to no points")

    start = time.perf_counter()
    summary = RunSummary()
    if which == "asymptotics":
        ns = [p["n"] for p in points]
        rows = [bounds.bell_asymptotics(n) for n in ns]
        trend = bounds.asymptotic_trend(ns)
        for form, ok in trend.items():
            summary.record(ok, form)
        summary.wall_time = time.perf_counter() - start
        if fmt == "json":
            for a in rows:
                print(report.dumps(report.asymptotics_dict(a)), file=out)
            print(report.dumps({"monotone_decrease": trend, "summary": _summary_dict(summary)}), file=out)
        elif fmt == "csv":
            _emit(out, ["n,log_exact,log_de_bruijn,log_odlyzko,rel_err_de_bruijn,rel_err_odlyzko"])
            for a in rows:
                d = report.asymptotics_dict(a)
                print(",".join(repr(d[k]) if k != "n" else str(d[k]) for k in d), file=out)
        else:
            for a in rows:
                d = report.asymptotics_dict(a)
                print(
                    f"n={a.n} log_exact={d['log_exact']!r} de_bruijn_rel_err={d['rel_err_de_bruijn']:.6e} "
                    f"odlyzko_rel_err={d['rel_err_odlyzko']:.6e}",
                    file=out,
                )
            for form, ok in trend.items():
                print(f"{form}: relative log error {'decreases monotonically' if ok else 'NOT monotone'}", file=out)
            print(_summary_line(summary), file=out)
        return summary

    check = {
        "adell": lambda p: bounds.check_adell(p["n"], p["m"]),
        "lambda": lambda p: bounds.check_lambda_sandwich(p["n"], p["r"]),
        "berend-tal": lambda p: bounds.check_berend_tal(p["n"]),
    }[which]
    reps = [check(p) for p in points]
    for r in reps:
        summary.record(r.satisfied, r)
    summary.wall_time = time.perf_counter() - start
    if fmt == "json":
        for r in reps:
            print(report.dumps(report.bound_dict(r)), file=out)
        print(report.dumps({"summary": _summary_dict(summary)}), file=out)
    elif fmt == "csv":
        _emit(out, report.bound_csv(reps))
    else:
        for r in reps:
            print(report.bound_plain(r), file=out)
        print(_summary_line(summary), file=out)
    return summary


# --- ingest-bfile -------------------------------------------------------------


def run_ingest_bfile(path: str, sequence: str, check: bool, fmt: str, out) -> RunSummary:
    if sequence not in bfile_mod.SEQUENCES:
        raise CliUsageError(f"unknown sequence {sequence!r}")
    bf = bfile_mod.read_bfile(path)
    summary = RunSummary()
    mismatches = []
    if check:
        mismatches = bfile_mod.check_bfile(bf, sequence)
        bad = {m.index for m in mismatches}
        for idx, _ in bf:
            summary.record(idx not in bad, idx)
    if fmt == "json":
        d = {"path": str(path), "sequence": sequence, "entries": len(bf)}
        if check:
            d["mismatches"] = [
                {"index": m.index, "expected": None if m.expected is None else str(m.expected), "found": str(m.found)}
                for m in mismatches
            ]
            d["summary"] = _summary_dict(summary)
        print(report.dumps(d), file=out)
    else:
        print(f"{len(bf)} entries read from {path}", file=out)
        for m in mismatches:
            print(f"MISMATCH index {m.index}: expected {m.expected}, found {m.found}", file=out)
        if check:
            print(_summary_line(summary), file=out)
    return summary


# --- entry point --------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="rencontres", description="Exact fixed-point combinatorics and identity verification.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    fmt = dict(choices=report.FORMATS, default="plain")

    s = sub.add_parser("seq", help="print a sequence value or row")
    s.add_argument("name")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int)
    s.add_argument("--format", **fmt)

    v = sub.add_parser("verify", help="sweep an identity over a parameter grid")
    v.add_argument("identity")
    v.add_argument("--mode", default="corrected")
    v.add_argument("--range", required=True, dest="range_text")
    v.add_argument("--parallel", type=int, default=1)
    v.add_argument("--format", **fmt)

    o = sub.add_parser("oracle", help="brute-force statistic histogram")
    o.add_argument("stat")
    o.add_argument("--n", type=int, required=True)
    o.add_argument("--q", type=int)
    o.add_argument("--compare", action="store_true")
    o.add_argument("--max-perm-n", type=int, default=oracle.PERMUTATION_CEILING)
    o.add_argument("--max-partition-n", type=int, default=oracle.PARTITION_CEILING)
    o.add_argument("--format", **fmt)

    b = sub.add_parser("bounds", help="check bounds and asymptotic forms")
    b.add_argument("which")
    b.add_argument("--range", required=True, dest="range_text")
    b.add_argument("--format", **fmt)

    i = sub.add_parser("ingest-bfile", help="read a b-file and optionally cross-check it")
    i.add_argument("path")
    i.add_argument("--seq", required=True)
    i.add_argument("--check", action="store_true")
    i.add_argument("--format", choices=("plain", "json"), default="plain")
    return p


def main(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
    try:
        args = build_parser().parse_args(argv)
        if args.command == "seq":
            return run_seq(args.name, args.n, args.k, args.format, out)
        if args.command == "verify":
            spec = SweepSpec.from_text(args.identity, args.range_text, args.mode, args.parallel)
            return run_verify(spec, args.format, out).exit_code
        if args.command == "oracle":
            return run_oracle(
                args.stat, args.n, args.q, args.compare, args.format, out,
                args.max_perm_n, args.max_partition_n,
            ).exit_code
        if args.command == "bounds":
            return run_bounds(args.which, args.range_text, args.format, out).exit_code
        if args.command == "ingest-bfile":
            return run_ingest_bfile(args.path, args.seq, args.check, args.format, out).exit_code
    except (CliUsageError, UsageError, DomainError, bounds.BoundDomainError,
            bfile_mod.BFileParseError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE
    except oracle.ResourceLimitError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_RESOURCE
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
