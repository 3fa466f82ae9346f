"""Rendering of identity and bound reports as plain text, JSON and CSV.

Exact quantities are always decimal strings (``"5/2"`` for rationals);
log-domain bound values are JSON floats.
"""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Sequence

import mpmath

from .bounds import BellAsymptotics, BoundReport
from .identities import IdentityReport

FORMATS = ("plain", "json", "csv")


def exact_str(v) -> str:
    if isinstance(v, Fraction):
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    return str(int(v))


def side_json(v):
    if isinstance(v, tuple):
        return [exact_str(c) for c in v]
    return exact_str(v)


def side_token(v) -> str:
    if isinstance(v, tuple):
        return ";".join(exact_str(c) for c in v)
    return exact_str(v)


def identity_dict(rep: IdentityReport) -> dict[str, Any]:
    d: dict[str, Any] = {
        "identity": rep.id.value,
        "mode": rep.mode.value,
        "params": {k: int(v) for k, v in rep.params.items()},
        "lhs": side_json(rep.lhs),
        "rhs": side_json(rep.rhs),
        "equal": rep.equal,
        "elapsed_ms": round(rep.elapsed, 6),
    }
    if rep.residual is not None:
        d["residual"] = rep.residual
    return d


def dumps(obj: Any) -> str:
    return json.dumps(obj, ensure_ascii=True)


def identity_json(rep: IdentityReport) -> str:
    return dumps(identity_dict(rep))


def identity_plain(rep: IdentityReport) -> str:
    status = {True: "PASS", False: "FAIL", None: "DIAG"}[rep.equal]
    params = " ".join(f"{k}={v}" for k, v in rep.params.items())
    line = f"{status} {rep.id.value} [{rep.mode.value}] {params} lhs={side_token(rep.lhs)} rhs={side_token(rep.rhs)}"
    if rep.residual is not None:
        line += f" residual={rep.residual:.17g}"
    return line


def identity_csv(reports: Sequence[IdentityReport]) -> list[str]:
    names: list[str] = []
    for r in reports:
        for k in r.params:
            if k not in names:
                names.append(k)
    rows = [",".join(["identity", "mode", *names, "lhs", "rhs", "equal", "elapsed_ms"])]
    for r in reports:
        cells = [r.id.value, r.mode.value]
        cells += [str(r.params.get(k, "")) for k in names]
        cells += [side_token(r.lhs), side_token(r.rhs), str(r.equal).lower(), f"{r.elapsed:.6f}"]
        rows.append(",".join(cells))
    return rows


def logf(x) -> float | None:
    """Log-domain value as a double (17 significant digits round-trip)."""
    if x is None:
        return None
    if mpmath.isinf(x):
        return float("inf")
    return float(f"{float(x):.17g}")


def bound_dict(rep: BoundReport) -> dict[str, Any]:
    d: dict[str, Any] = {
        "bound": rep.bound_id,
        "params": dict(rep.params),
        "log_exact": logf(rep.exact),
        "log_bound": logf(rep.bound),
        "satisfied": rep.satisfied,
        "slack": logf(rep.slack),
    }
    for k, v in rep.extra.items():
        d[k] = v if isinstance(v, bool) else logf(v)
    return d


def bound_plain(rep: BoundReport) -> str:
    params = " ".join(f"{k}={v}" for k, v in rep.params.items())
    status = "OK  " if rep.satisfied else "VIOL"
    exact = "-inf" if rep.exact is None else f"{float(rep.exact):.17g}"
    return f"{status} {rep.bound_id} {params} log_exact={exact} log_bound={float(rep.bound):.17g} slack={float(rep.slack):.6g}"


def bound_csv(reports: Sequence[BoundReport]) -> list[str]:
    if not reports:
        return ["bound,log_exact,log_bound,satisfied,slack"]
    names = list(reports[0].params)
    rows = [",".join(["bound", *names, "log_exact", "log_bound", "satisfied", "slack"])]
    for r in reports:
        exact = "" if r.exact is None else f"{float(r.exact):.17g}"
        rows.append(
            ",".join(
                [r.bound_id, *(str(r.params[k]) for k in names), exact,
                 f"{float(r.bound):.17g}", str(r.satisfied).lower(), f"{float(r.slack):.17g}"]
            )
        )
    return rows


def asymptotics_dict(a: BellAsymptotics) -> dict[str, Any]:
    return {
        "n": a.n,
        "log_exact": logf(a.exact),
        "log_de_bruijn": logf(a.de_bruijn),
        "log_odlyzko": logf(a.odlyzko),
        "rel_err_de_bruijn": logf(a.de_bruijn_error),
        "rel_err_odlyzko": logf(a.odlyzko_error),
    }
