"""OEIS-style b-file reading and cross-checking.

A b-file is plain text with one ``index value`` pair per line (ASCII
decimal, one space).  Blank lines and lines starting with ``#`` are
ignored.  Triangular sequences are addressed by their row-major flattened
index, rows n = 0, 1, ... with k = 0..n.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Iterable

from . import combinat

_LINE = re.compile(r"^(-?\d+) (-?\d+)$")


class BFileParseError(ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


@dataclass(frozen=True)
class BFile:
    entries: tuple[tuple[int, int], ...]

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)


def parse_bfile(lines: Iterable[str]) -> BFile:
    entries: list[tuple[int, int]] = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.rstrip("\r\n").rstrip()
        if not line or line.lstrip().startswith("#"):
            continue
        m = _LINE.match(line)
        if not m:
            raise BFileParseError(lineno, f"expected 'index value', got {line!r}")
        idx, val = int(m.group(1)), int(m.group(2))
        if entries and idx <= entries[-1][0]:
            raise BFileParseError(lineno, f"index {idx} does not increase (previous {entries[-1][0]})")
        entries.append((idx, val))
    return BFile(tuple(entries))


def read_bfile(path: str | Path) -> BFile:
    with open(path, encoding="ascii") as fh:
        return parse_bfile(fh)


def triangle_position(index: int) -> tuple[int, int]:
    """Flattened row-major index -> (n, k) with 0 <= k <= n."""
    if index < 0:
        raise ValueError("negative triangle index")
    n = (math.isqrt(8 * index + 1) - 1) // 2
    return n, index - n * (n + 1) // 2


def _triangle(f: Callable[[int, int], int]) -> Callable[[int], int]:
    def at(index: int) -> int:
        n, k = triangle_position(index)
        return f(n, k)

    return at


SEQUENCES: dict[str, Callable[[int], int]] = {
    "derangement": combinat.derangement,
    "bell": combinat.bell,
    "rencontres": _triangle(combinat.rencontres),
    "stirling1": _triangle(combinat.stirling1_signed),
    "stirling2": _triangle(combinat.stirling2),
    "eulerian": _triangle(combinat.eulerian),
}


@dataclass(frozen=True)
class Mismatch:
    index: int
    expected: int
    found: int


def check_bfile(bfile: BFile, sequence: str) -> list[Mismatch]:
    """Entries whose value disagrees with the computed sequence."""
    f = SEQUENCES[sequence]
    out = []
    for idx, val in bfile:
        expected = f(idx) if idx >= 0 else None
        if expected != val:
            out.append(Mismatch(idx, expected, val))
    return out
