"""Exit criteria for the package, one test per criterion.

Each test records a PASS/FAIL line that pytest prints under
"acceptance criteria" at the end of the run.
"""
import io
import json
import math
import time
from fractions import Fraction

import mpmath

from rencontres import combinat as C
from rencontres.bounds import (
    asymptotic_trend,
    bell_asymptotics,
    check_adell,
    check_berend_tal,
    check_lambda_sandwich,
    lambert_w,
    log_of_nat,
)
from rencontres.cli import main
from rencontres.identities import EvalMode, schlomilch_stirling1, vassilev_power, verify_identity, worpitzky_power
from rencontres.oracle import StatisticId, appendix_c_coefficient, enumerate_statistic


def _check(log, num, desc, ok, detail):
    log((num, desc, bool(ok), detail))
    assert ok, f"criterion {num} failed: {detail}"


def test_01_main_sum_rule(acceptance_log):
    t0 = time.perf_counter()
    results = [
        verify_identity("MAIN_SUM_RULE", n=n, r=r).equal
        for n in range(1, 13)
        for r in range(-1, n)
    ]
    dt = time.perf_counter() - t0
    ok = len(results) == 90 and all(results) and dt < 5
    _check(acceptance_log, 1, "main sum rule, 1<=n<=12, 0<=r+1<=n", ok,
           f"{sum(results)}/{len(results)} exact, {dt:.2f} s")


def test_02_moment_identity(acceptance_log):
    pts = [(n, q) for n in range(13) for q in range(n + 1)]
    good = sum(verify_identity("MOMENT_BELL", n=n, q=q).equal for n, q in pts)
    mult = [verify_identity("MOMENT_BELL", n=12, q=q).lhs / math.factorial(12) for q in range(1, 6)]
    ok = good == len(pts) and mult == [1, 2, 5, 15, 52]
    _check(acceptance_log, 2, "moment identity sum k^q p_n(k) = B_q n!", ok,
           f"{good}/{len(pts)} exact, multipliers {[int(m) for m in mult]}")


def test_03_oracle_equivalence(acceptance_log):
    t0 = time.perf_counter()
    bad = []
    for n in range(9):
        if list(enumerate_statistic(StatisticId.FIXED_POINTS, n).counts) != C.rencontres_row(n):
            bad.append(("fixed", n))
        if list(enumerate_statistic(StatisticId.CYCLES, n).counts) != [C.stirling1_unsigned(n, k) for k in range(n + 1)]:
            bad.append(("cycles", n))
        if list(enumerate_statistic(StatisticId.ASCENTS, n).counts) != [C.eulerian(n, j) for j in range(max(n, 1))]:
            bad.append(("ascents", n))
    for n in range(11):
        row = enumerate_statistic(StatisticId.PARTITION_BLOCKS, n)
        if list(row.counts) != [C.stirling2(n, k) for k in range(n + 1)] or row.total != C.bell(n):
            bad.append(("partitions", n))
    dt = time.perf_counter() - t0
    _check(acceptance_log, 3, "brute-force histograms equal closed forms", not bad and dt < 30,
           f"mismatches {bad}, {dt:.2f} s")


def test_04_power_identities(acceptance_log):
    v = all(vassilev_power(k, i) == k**i for k in range(1, 11) for i in range(11))
    c = all(appendix_c_coefficient(k, i) == k**i for k in range(1, 7) for i in range(6))
    w = all(worpitzky_power(k, i, EvalMode.CORRECTED) == k**i for k in range(1, 11) for i in range(11))
    w_small = all(worpitzky_power(k, i, EvalMode.CORRECTED) == k**i for k in range(1, 7) for i in range(6))
    _check(acceptance_log, 4, "binomial/coefficient/Worpitzky expansions of k^i", v and c and w and w_small,
           f"vassilev={v} coefficient={c} worpitzky={w}")


def test_05_schlomilch(acceptance_log):
    pts = [(q, i) for q in range(13) for i in range(q + 1)]
    good = sum(schlomilch_stirling1(q, i) == C.stirling1_signed(q, i) for q, i in pts)
    _check(acceptance_log, 5, "Schlomilch formula equals Stirling-1 recurrence", good == len(pts),
           f"{good}/{len(pts)} exact")


def test_06_nested_identities(acceptance_log):
    t0 = time.perf_counter()
    counts = {}
    for ident in ("BINOMIAL_SUM_RULE", "NESTED_SCHLOMILCH", "NORMALIZED_NESTED"):
        reps = [
            verify_identity(ident, EvalMode.CORRECTED, n=n, r=r)
            for n in range(1, 9)
            for r in range(-1, n)
        ]
        target = 1 if ident == "NORMALIZED_NESTED" else None
        counts[ident] = sum(
            r.equal and (r.lhs == (target if target is not None else math.factorial(r.params["n"])))
            for r in reps
        ), len(reps)
    dt = time.perf_counter() - t0
    ok = all(g == t for g, t in counts.values()) and dt < 60
    _check(acceptance_log, 6, "nested binomial identities (corrected)", ok,
           ", ".join(f"{k} {g}/{t}" for k, (g, t) in counts.items()) + f", {dt:.2f} s")


def test_07_errata(acceptance_log):
    aw = verify_identity("BELL_DOUBLE", EvalMode.AS_WRITTEN, q=2)
    aw_fails = aw.equal is False and aw.lhs == Fraction(5, 2)
    corrected = all(verify_identity("BELL_DOUBLE", EvalMode.CORRECTED, q=q).equal for q in range(13))
    w = worpitzky_power(3, 2, EvalMode.AS_WRITTEN)
    ok = aw_fails and corrected and w == 5 and w != 9
    _check(acceptance_log, 7, "printed errata reproduced as failures", ok,
           f"BELL_DOUBLE as-written lhs={aw.lhs}, corrected 0..12 ok={corrected}, Worpitzky as-written (3,2)={w}")


def test_08_bounds(acceptance_log):
    adell = all(check_adell(n, m).satisfied for n in range(2, 61) for m in range(n + 1))
    lam = all(check_lambda_sandwich(n, r).satisfied for r in range(2, 7) for n in range(r + 1, 21))
    bt = all(check_berend_tal(n).satisfied for n in range(1, 201))
    # log accuracy: compare against 256-bit reference on the largest values in play
    worst = mpmath.mpf(0)
    for x in (C.bell(200), C.factorial(60), abs(C.stirling1_signed(61, 30))):
        with mpmath.workprec(256):
            ref = mpmath.log(mpmath.mpf(x))
            worst = max(worst, abs(log_of_nat(x) - ref) / ref)
    bits = float(-mpmath.log(worst, 2)) if worst else float("inf")
    ok = adell and lam and bt and bits >= 60
    _check(acceptance_log, 8, "Stirling-1 bound, lambda sandwich, Bell bound", ok,
           f"adell={adell} lambda={lam} berend-tal={bt}, log accuracy {bits:.0f} bits")


def test_09_asymptotics(acceptance_log):
    trend = asymptotic_trend([10, 50, 100, 200])
    probes = [0.5, 1, math.e, 10, 100, 1e6]
    worst = max(abs(lambert_w(x) * math.exp(lambert_w(x)) - x) / max(x, 1) for x in probes)
    errs = [float(bell_asymptotics(n).odlyzko_error) for n in (10, 50, 100, 200)]
    ok = all(trend.values()) and worst <= 1e-12
    _check(acceptance_log, 9, "Lambert-W asymptotic forms converge, W residual", ok,
           f"trend {trend}, odlyzko rel errors {[f'{e:.2e}' for e in errs]}, max W residual {worst:.1e}")


def _run(*argv):
    out, err = io.StringIO(), io.StringIO()
    return main(list(argv), out=out, err=err), out.getvalue()


def test_10_cli_contract(acceptance_log, tmp_path):
    codes = {
        "ok": _run("verify", "MAIN_SUM_RULE", "--range", "n=1..10,r=0..n-1")[0],
        "fail": _run("verify", "BELL_DOUBLE", "--mode", "as-written", "--range", "q=2..2")[0],
        "usage": _run("seq", "nope", "--n", "1")[0],
        "cap": _run("oracle", "FIXED_POINTS", "--n", "10")[0],
    }
    exit_ok = codes == {"ok": 0, "fail": 1, "usage": 2, "cap": 3}

    _, out = _run("verify", "NORMALIZED_NESTED", "--range", "n=1..5,r=-1..n-1", "--format", "json")
    roundtrip = all(json.dumps(json.loads(line)) == line for line in out.splitlines())

    base = ("verify", "NESTED_SCHLOMILCH", "--range", "n=1..6,r=-1..n-1", "--format", "json")

    def strip(text):
        rows = []
        for line in text.splitlines():
            d = json.loads(line)
            d.pop("elapsed_ms", None)
            rows.append(json.dumps(d, sort_keys=True))
        return sorted(rows)

    par_equal = strip(_run(*base)[1]) == strip(_run(*base, "--parallel", "4")[1])

    corrupt = tmp_path / "b.txt"
    values = [C.derangement(n) for n in range(20)]
    values[7] += 1
    corrupt.write_text("".join(f"{n} {v}\n" for n, v in enumerate(values)))
    code, out = _run("ingest-bfile", str(corrupt), "--seq", "derangement", "--check")
    bfile_ok = code == 1 and out.count("MISMATCH") == 1 and "index 7" in out

    ok = exit_ok and roundtrip and par_equal and bfile_ok
    _check(acceptance_log, 10, "CLI exit codes, JSON round trip, parallel == serial, b-file corruption", ok,
           f"codes {codes}, roundtrip={roundtrip}, parallel={par_equal}, bfile={bfile_ok}")
