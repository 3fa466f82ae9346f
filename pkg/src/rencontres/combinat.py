"""Exact base sequences: factorials, derangements, rencontres numbers,
Stirling numbers of both kinds, Bell and Eulerian numbers.

Every recurrence-driven table lives in a :class:`TriangleCache`.  Rows are
built eagerly up to the requested index, published as tuples and never
touched again, so concurrent readers only ever see complete rows.
"""
from __future__ import annotations

import math
import threading
from typing import Callable, Sequence

from .polynomial import IntPolynomial

Row = tuple[int, ...]


class TriangleCache:
    """Memoized table of integer rows produced by a row recurrence.

    ``step(previous_row, q)`` must return row ``q`` given row ``q - 1``.
    Extension happens under a lock; published rows are immutable tuples.
    """

    def __init__(self, name: str, first_row: Sequence[int], step: Callable[[Row, int], Sequence[int]]):
        self.name = name
        self._step = step
        self._rows: list[Row] = [tuple(first_row)]
        self._lock = threading.Lock()

    def __len__(self) -> int:
        return len(self._rows)

    def row(self, q: int) -> Row:
        if q < 0:
            raise ValueError(f"{self.name}: negative row index {q}")
        rows = self._rows
        if q < len(rows):
            return rows[q]
        with self._lock:
            while len(rows) <= q:
                nxt = len(rows)
                rows.append(tuple(self._step(rows[-1], nxt)))
        return rows[q]

    def __call__(self, q: int, k: int) -> int:
        if k < 0:
            return 0
        r = self.row(q)
        return r[k] if k < len(r) else 0

    def recompute_row(self, q: int) -> Row:
        """Rebuild row ``q`` from the base case without touching the cache."""
        r = self._rows[0]
        for i in range(1, q + 1):
            r = tuple(self._step(r, i))
        return r


def _stirling1_step(prev: Row, q: int) -> list[int]:
    # s(q, k) = s(q-1, k-1) - (q-1) s(q-1, k)
    m = q - 1
    new = [0] * (q + 1)
    for k in range(1, q + 1):
        a = prev[k - 1]
        b = prev[k] if k < len(prev) else 0
        new[k] = a - m * b
    return new


def _stirling2_step(prev: Row, q: int) -> list[int]:
    new = [0] * (q + 1)
    for k in range(1, q + 1):
        a = prev[k - 1]
        b = prev[k] if k < len(prev) else 0
        new[k] = k * b + a
    return new


def _eulerian_step(prev: Row, i: int) -> list[int]:
    # <i j> = (j+1)<i-1 j> + (i-j)<i-1 j-1>, with <i 0> = 1
    width = max(i, 1)
    new = [0] * width
    for j in range(width):
        a = prev[j] if j < len(prev) else 0
        b = prev[j - 1] if 0 <= j - 1 < len(prev) else 0
        new[j] = (j + 1) * a + (i - j) * b
    return new


def _derangement_step(prev: Row, n: int) -> list[int]:
    # Rows hold (d_{n-1}, d_n) so each step sees two predecessors.
    d_nm2, d_nm1 = prev
    return [d_nm1, (n - 1) * (d_nm1 + d_nm2)]


STIRLING1 = TriangleCache("stirling1", [1], _stirling1_step)
STIRLING2 = TriangleCache("stirling2", [1], _stirling2_step)
EULERIAN = TriangleCache("eulerian", [1], _eulerian_step)
# row 0 is (d_{-1}, d_0) with the convention d_{-1} = 0 so that d_1 = 0*(...)=0
_DERANGEMENTS = TriangleCache("derangement", [0, 1], _derangement_step)


def _check_nat(**kw: int) -> None:
    for name, v in kw.items():
        if v < 0:
            raise ValueError(f"{name} must be a natural number, got {v}")


def factorial(n: int) -> int:
    _check_nat(n=n)
    return math.factorial(n)


def binomial(n: int, k: int) -> int:
    """C(n, k), zero when k > n."""
    _check_nat(n=n, k=k)
    return math.comb(n, k)


def derangement(n: int) -> int:
    """Number of fixed-point-free permutations of n elements (Euler recurrence)."""
    _check_nat(n=n)
    return _DERANGEMENTS.row(n)[1]


def derangement_alternating(n: int) -> int:
    """d_n = n! * sum_{i<=n} (-1)^i / i!, evaluated as an integer sum."""
    _check_nat(n=n)
    total = 0
    term = 1  # n!/n!, walking i downward gives n!/i!
    for i in range(n, -1, -1):
        total += term if i % 2 == 0 else -term
        term *= i if i else 1
    return total


def rencontres(n: int, k: int) -> int:
    """p_n(k): permutations of n elements with exactly k fixed points."""
    _check_nat(n=n, k=k)
    if k > n:
        return 0
    return binomial(n, k) * derangement(n - k)


def rencontres_row(n: int) -> list[int]:
    return [rencontres(n, k) for k in range(n + 1)]


def stirling1_signed(q: int, k: int) -> int:
    """Signed Stirling number of the first kind s(q, k)."""
    _check_nat(q=q, k=k)
    return STIRLING1(q, k)


def stirling1_unsigned(q: int, k: int) -> int:
    return abs(stirling1_signed(q, k))


def stirling2(q: int, k: int) -> int:
    """Stirling number of the second kind from the explicit alternating sum.

    ``(1/k!) * sum_j (-1)^(k-j) C(k, j) j^q`` with 0**0 == 1.
    """
    _check_nat(q=q, k=k)
    if k > q:
        return 0
    total = 0
    for j in range(k + 1):
        t = math.comb(k, j) * j**q
        total += -t if (k - j) % 2 else t
    value, rem = divmod(total, math.factorial(k))
    assert rem == 0
    return value


def stirling2_recurrence(q: int, k: int) -> int:
    """Cross-check path: S(q,k) = k S(q-1,k) + S(q-1,k-1)."""
    _check_nat(q=q, k=k)
    return STIRLING2(q, k)


def bell(q: int, upper: int | None = None) -> int:
    """Bell number B_q as the Stirling-2 row sum up to ``upper`` (default q).

    Any ``upper >= q`` gives the same value; the row itself comes from the
    memoized recurrence table.
    """
    _check_nat(q=q)
    if upper is None:
        upper = q
    row = STIRLING2.row(q)
    return sum(row[: upper + 1])


def eulerian(i: int, j: int) -> int:
    """Eulerian number <i j>: permutations of i elements with j ascents."""
    _check_nat(i=i, j=j)
    return EULERIAN(i, j)


def falling_factorial(x: int, m: int) -> int:
    """x (x-1) ... (x-m+1); the empty product for m = 0."""
    out = 1
    for j in range(m):
        out *= x - j
    return out


def falling_factorial_poly(q: int) -> IntPolynomial:
    """Coefficients of x(x-1)...(x-q+1)."""
    _check_nat(q=q)
    p = IntPolynomial([1])
    for j in range(q):
        p = p * IntPolynomial.linear(-j)
    return p


def rising_factorial_poly(n: int) -> IntPolynomial:
    """Coefficients of x(x+1)...(x+n-1)."""
    _check_nat(n=n)
    p = IntPolynomial([1])
    for j in range(n):
        p = p * IntPolynomial.linear(j)
    return p
