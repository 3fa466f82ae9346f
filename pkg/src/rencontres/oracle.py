"""Brute-force ground truth.

Nothing in here calls the closed forms in :mod:`rencontres.combinat`; the
histograms are produced by walking every permutation or set partition.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from typing import Iterator, Optional

from .polynomial import IntPolynomial

PERMUTATION_CEILING = 9
PARTITION_CEILING = 12


class ResourceLimitError(RuntimeError):
    """Requested enumeration exceeds the configured ceiling."""


class StatisticId(str, enum.Enum):
    FIXED_POINTS = "FIXED_POINTS"
    CYCLES = "CYCLES"
    PARTITION_BLOCKS = "PARTITION_BLOCKS"
    ASCENTS = "ASCENTS"
    MARKED_TUPLES = "MARKED_TUPLES"


@dataclass(frozen=True)
class StatRow:
    """Histogram of a statistic; ``counts[v]`` is the number of objects with value v.

    For MARKED_TUPLES the row holds a single entry, the total count, and
    ``q`` records the tuple length.
    """

    statistic: StatisticId
    n: int
    counts: tuple[int, ...]
    q: Optional[int] = field(default=None)

    @property
    def total(self) -> int:
        return sum(self.counts)


def permutations_lex(n: int) -> Iterator[list[int]]:
    """All permutations of 0..n-1 in lexicographic order, by successor steps.

    The same list object is yielded each time and mutated in place; copy it
    if you need to keep it.
    """
    a = list(range(n))
    yield a
    while True:
        i = n - 2
        while i >= 0 and a[i] >= a[i + 1]:
            i -= 1
        if i < 0:
            return
        j = n - 1
        while a[j] <= a[i]:
            j -= 1
        a[i], a[j] = a[j], a[i]
        a[i + 1:] = reversed(a[i + 1:])
        yield a


def set_partitions_rgs(n: int) -> Iterator[list[int]]:
    """Restricted growth strings of length n (one per set partition).

    ``a[0] = 0`` and ``a[i] <= 1 + max(a[:i])``; block count is ``max + 1``.
    Mutated in place like :func:`permutations_lex`.
    """
    if n == 0:
        yield []
        return
    a = [0] * n
    b = [1] * n  # b[i] = 1 + max(a[:i]) upper bound for a[i]
    yield a
    while True:
        i = n - 1
        while i > 0 and a[i] == b[i]:
            i -= 1
        if i == 0:
            return
        a[i] += 1
        m = max(b[i], a[i] + 1)
        for j in range(i + 1, n):
            a[j] = 0
            b[j] = m
        yield a


def count_fixed_points(p: list[int]) -> int:
    return sum(1 for i, v in enumerate(p) if i == v)


def count_cycles(p: list[int]) -> int:
    seen = [False] * len(p)
    cycles = 0
    for start in range(len(p)):
        if seen[start]:
            continue
        cycles += 1
        j = start
        while not seen[j]:
            seen[j] = True
            j = p[j]
    return cycles


def count_ascents(p: list[int]) -> int:
    return sum(1 for i in range(len(p) - 1) if p[i] < p[i + 1])


def _check_ceiling(n: int, ceiling: int, what: str) -> None:
    if n < 0:
        raise ValueError("n must be a natural number")
    if n > ceiling:
        raise ResourceLimitError(f"{what} enumeration capped at n={ceiling}, got n={n}")


def _permutation_histogram(n: int, stat, width: int) -> tuple[int, ...]:
    counts = [0] * width
    for p in permutations_lex(n):
        counts[stat(p)] += 1
    return tuple(counts)


def marked_tuples_literal(n: int, q: int) -> int:
    """Count (permutation, ordered q-tuple of its fixed points) pairs one by one."""
    total = 0
    for p in permutations_lex(n):
        fixed = [i for i, v in enumerate(p) if i == v]
        total += sum(1 for _ in itertools.product(fixed, repeat=q))
    return total


def enumerate_statistic(
    stat: StatisticId | str,
    n: int,
    q: Optional[int] = None,
    *,
    permutation_ceiling: int = PERMUTATION_CEILING,
    partition_ceiling: int = PARTITION_CEILING,
) -> StatRow:
    stat = StatisticId(stat)
    if (q is not None) != (stat is StatisticId.MARKED_TUPLES):
        raise ValueError("q is required for MARKED_TUPLES and only for it")

    if stat is StatisticId.PARTITION_BLOCKS:
        _check_ceiling(n, partition_ceiling, "partition")
        counts = [0] * (n + 1)
        for a in set_partitions_rgs(n):
            counts[max(a) + 1 if a else 0] += 1
        return StatRow(stat, n, tuple(counts))

    _check_ceiling(n, permutation_ceiling, "permutation")
    if stat is StatisticId.FIXED_POINTS:
        counts = _permutation_histogram(n, count_fixed_points, n + 1)
    elif stat is StatisticId.CYCLES:
        counts = _permutation_histogram(n, count_cycles, n + 1)
    elif stat is StatisticId.ASCENTS:
        counts = _permutation_histogram(n, count_ascents, max(n, 1))
    else:
        if q < 0:
            raise ValueError("q must be a natural number")
        # weight the fixed-point histogram by k^q instead of listing tuples
        fixed = _permutation_histogram(n, count_fixed_points, n + 1)
        return StatRow(stat, n, (sum(k**q * c for k, c in enumerate(fixed)),), q)
    return StatRow(stat, n, counts)


def appendix_c_coefficient(k: int, i: int) -> int:
    """Coefficient of x^((k-1) i) in ((1+x)^k - x^k)^i, by polynomial expansion."""
    if k < 1:
        raise ValueError("k must be at least 1")
    if i < 0:
        raise ValueError("i must be a natural number")
    base = IntPolynomial([1, 1]) ** k - IntPolynomial.monomial(k)
    return (base**i)[(k - 1) * i]
