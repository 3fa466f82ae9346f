"""Parameter grids and the identity sweep runner.

Range strings look like ``"n=1..10,r=0..n-1"`` or ``"n=10,50,100,200"``.
A bound may be an integer, an earlier parameter name, or ``name+c`` /
``name-c``; dependent bounds are resolved for each value of the outer
parameters, so the grid comes out in lexicographic parameter order.
"""
from __future__ import annotations

import re
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence

from .identities import (
    PARAMETERS,
    DomainError,
    EvalMode,
    IdentityId,
    IdentityReport,
    UsageError,
    verify_identity,
)


class RangeSyntaxError(UsageError):
    pass


_EXPR = re.compile(r"^\s*(?:(-?\d+)|([A-Za-z_]\w*)\s*(?:([+-])\s*(\d+))?)\s*$")


@dataclass(frozen=True)
class Bound:
    constant: int = 0
    name: Optional[str] = None

    def resolve(self, env: dict[str, int]) -> int:
        if self.name is None:
            return self.constant
        return env[self.name] + self.constant

    def __str__(self) -> str:
        if self.name is None:
            return str(self.constant)
        if self.constant == 0:
            return self.name
        return f"{self.name}{self.constant:+d}"


def parse_bound(text: str) -> Bound:
    m = _EXPR.match(text)
    if not m:
        raise RangeSyntaxError(f"cannot parse bound {text!r}")
    if m.group(1) is not None:
        return Bound(int(m.group(1)))
    c = int(m.group(4) or 0)
    return Bound(-c if m.group(3) == "-" else c, m.group(2))


@dataclass(frozen=True)
class ParamRange:
    name: str
    interval: Optional[tuple[Bound, Bound]] = None
    values: tuple[Bound, ...] = ()

    def expand(self, env: dict[str, int]) -> list[int]:
        if self.interval is not None:
            lo, hi = (b.resolve(env) for b in self.interval)
            return list(range(lo, hi + 1))
        return [b.resolve(env) for b in self.values]

    def depends_on(self) -> set[str]:
        bounds = self.interval if self.interval is not None else self.values
        return {b.name for b in bounds if b.name is not None}


def parse_range(text: str) -> list[ParamRange]:
    """Parse ``"p=a..b,q=c..d"`` / ``"n=10,50,100"`` into ordered ranges."""
    groups: list[tuple[str, list[str]]] = []
    for token in text.split(","):
        token = token.strip()
        if not token:
            raise RangeSyntaxError(f"empty item in range {text!r}")
        if "=" in token:
            name, _, rhs = token.partition("=")
            name = name.strip()
            if not re.fullmatch(r"[A-Za-z_]\w*", name):
                raise RangeSyntaxError(f"bad parameter name {name!r}")
            if any(g[0] == name for g in groups):
                raise RangeSyntaxError(f"parameter {name!r} given twice")
            groups.append((name, [rhs]))
        elif groups:
            groups[-1][1].append(token)
        else:
            raise RangeSyntaxError(f"range must start with name=..., got {token!r}")

    ranges = []
    seen: set[str] = set()
    for name, items in groups:
        if len(items) == 1 and ".." in items[0]:
            lo, _, hi = items[0].partition("..")
            pr = ParamRange(name, interval=(parse_bound(lo), parse_bound(hi)))
        else:
            if any(".." in it for it in items):
                raise RangeSyntaxError(f"cannot mix a..b with a value list for {name!r}")
            pr = ParamRange(name, values=tuple(parse_bound(it) for it in items))
        unknown = pr.depends_on() - seen
        if unknown:
            raise RangeSyntaxError(
                f"{name!r} depends on {', '.join(sorted(unknown))} which must appear earlier"
            )
        seen.add(name)
        ranges.append(pr)
    return ranges


def expand_grid(ranges: Sequence[ParamRange]) -> Iterator[dict[str, int]]:
    def rec(i: int, env: dict[str, int]):
        if i == len(ranges):
            yield dict(env)
            return
        pr = ranges[i]
        for v in pr.expand(env):
            env[pr.name] = v
            yield from rec(i + 1, env)
        env.pop(pr.name, None)

    yield from rec(0, {})


@dataclass(frozen=True)
class SweepSpec:
    identity: IdentityId
    mode: EvalMode
    ranges: tuple[ParamRange, ...]
    parallel: int = 1

    @classmethod
    def from_text(cls, identity: str, range_text: str, mode: str = "corrected", parallel: int = 1) -> SweepSpec:
        try:
            ident = IdentityId(identity.upper())
        except ValueError:
            raise UsageError(f"unknown identity {identity!r}") from None
        try:
            m = EvalMode(mode.lower())
        except ValueError:
            raise UsageError(f"unknown mode {mode!r}") from None
        spec = cls(ident, m, tuple(parse_range(range_text)), max(1, parallel))
        spec.validate()
        return spec

    def validate(self) -> None:
        have = [r.name for r in self.ranges]
        needed = PARAMETERS[self.identity]
        missing = [p for p in needed if p not in have]
        extra = [p for p in have if p not in needed]
        if missing:
            raise UsageError(f"{self.identity.value} needs a range for: {', '.join(missing)}")
        if extra:
            raise UsageError(f"{self.identity.value} does not take: {', '.join(extra)}")

    def points(self) -> list[dict[str, int]]:
        pts = list(expand_grid(self.ranges))
        if not pts:
            raise UsageError("range expands to no parameter points")
        return pts


@dataclass
class RunSummary:
    total: int = 0
    passes: int = 0
    failures: int = 0
    skipped: int = 0
    first_failure: Optional[object] = None
    wall_time: float = field(default=0.0, compare=False)

    def record(self, ok: bool, item: object = None) -> None:
        self.total += 1
        if ok:
            self.passes += 1
        else:
            self.failures += 1
            if self.first_failure is None:
                self.first_failure = item

    @property
    def exit_code(self) -> int:
        return 1 if self.failures else 0


def _evaluate(args: tuple[IdentityId, EvalMode, dict[str, int]]) -> Optional[IdentityReport]:
    ident, mode, params = args
    try:
        return verify_identity(ident, mode, params)
    except DomainError:
        return None


def run_sweep(spec: SweepSpec) -> tuple[list[IdentityReport], RunSummary]:
    """Evaluate every grid point; points outside an identity's domain are skipped.

    Reports come back in grid order whatever the worker count.
    """
    start = time.perf_counter()
    jobs = [(spec.identity, spec.mode, p) for p in spec.points()]
    if spec.parallel > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=spec.parallel) as pool:
            chunk = max(1, len(jobs) // (4 * spec.parallel))
            results = list(pool.map(_evaluate, jobs, chunksize=chunk))
    else:
        results = [_evaluate(j) for j in jobs]

    summary = RunSummary()
    reports = []
    for rep in results:
        if rep is None:
            summary.skipped += 1
            continue
        reports.append(rep)
        summary.record(not rep.failed, rep)
    summary.wall_time = time.perf_counter() - start
    return reports, summary
