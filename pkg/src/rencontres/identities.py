"""Exact evaluation of both sides of the fixed-point sum rules.

Each identity has one evaluator registered under an :class:`IdentityId`.
Identities whose printed form is known to be wrong accept
``EvalMode.AS_WRITTEN`` (reproduce the printed formula) or
``EvalMode.CORRECTED``; the rest ignore the mode.
"""
from __future__ import annotations

import enum
import math
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Mapping, Optional, Union

import mpmath

from .combinat import (
    bell,
    binomial,
    derangement,
    derangement_alternating,
    eulerian,
    factorial,
    falling_factorial,
    rencontres,
    stirling1_signed,
)
from .polynomial import IntPolynomial


class UsageError(ValueError):
    """Missing or unexpected parameters for an identity."""


class DomainError(ValueError):
    """Parameters outside the range where the identity is claimed."""


class IdentityId(str, enum.Enum):
    MAIN_SUM_RULE = "MAIN_SUM_RULE"
    FALLING_MOMENT = "FALLING_MOMENT"
    MOMENT_BELL = "MOMENT_BELL"
    GENERATING_POLY = "GENERATING_POLY"
    DEUTSCH_ELIZALDE = "DEUTSCH_ELIZALDE"
    EULER_RECURRENCE = "EULER_RECURRENCE"
    WEIGHTED_PNK = "WEIGHTED_PNK"
    BINOMIAL_SUM_RULE = "BINOMIAL_SUM_RULE"
    NESTED_SCHLOMILCH = "NESTED_SCHLOMILCH"
    NORMALIZED_NESTED = "NORMALIZED_NESTED"
    BELL_DOUBLE = "BELL_DOUBLE"
    BELL_BINOMIAL = "BELL_BINOMIAL"
    DOBINSKI_FINITE = "DOBINSKI_FINITE"


class EvalMode(str, enum.Enum):
    AS_WRITTEN = "as-written"
    CORRECTED = "corrected"


Side = Union[Fraction, tuple[int, ...]]


@dataclass(frozen=True)
class IdentityReport:
    """Result of evaluating one identity at one parameter point.

    ``lhs``/``rhs`` are exact rationals, or coefficient tuples for
    GENERATING_POLY.  ``equal`` is None for diagnostics (DOBINSKI_FINITE),
    which carry a float ``residual`` instead.
    """

    id: IdentityId
    mode: EvalMode
    params: Mapping[str, int]
    lhs: Side
    rhs: Side
    equal: Optional[bool]
    elapsed: float = field(default=0.0, compare=False)
    residual: Optional[float] = None

    @property
    def failed(self) -> bool:
        return self.equal is False


# --- power expansions -------------------------------------------------------


def vassilev_power(k: int, i: int) -> int:
    """k^i as the finite alternating sum sum_l (-1)^l C(i,l) C(k(i-l), i)."""
    if k < 1:
        raise DomainError("k must be >= 1: the summation bound floor((k-1)i/k) is undefined at k = 0")
    if i < 0:
        raise DomainError("i must be a natural number")
    total = 0
    for l in range((k - 1) * i // k + 1):
        t = math.comb(i, l) * math.comb(k * (i - l), i)
        total += -t if l % 2 else t
    return total


def _power_or_vassilev(k: int, i: int) -> int:
    # the expansion needs a positive base; 0^i is taken directly
    if k == 0:
        return 1 if i == 0 else 0
    return vassilev_power(k, i)


def _gbinom(n: int, k: int) -> int:
    """Binomial coefficient extended to negative upper index.

    Only C(-1, 0) = 1 is reached, at q = 0 in the Schlomilch sum.
    """
    if k < 0:
        return 0
    if n >= 0:
        return math.comb(n, k)
    c = math.comb(k - n - 1, k)
    return -c if k % 2 else c


def schlomilch_stirling1(q: int, i: int) -> int:
    """s(q, i) from the Schlomilch double sum over 0 <= j <= h <= q - i."""
    if not 0 <= i <= q:
        raise DomainError("need 0 <= i <= q")
    d = q - i
    total = 0
    for h in range(d + 1):
        inner = 0
        for j in range(h + 1):
            t = math.comb(h, j) * (h - j) ** (d + h)
            inner += -t if j % 2 else t
        inner, rem = divmod(inner, math.factorial(h))
        assert rem == 0
        t = _gbinom(q - 1 + h, d + h) * math.comb(2 * q - i, d - h) * inner
        total += -t if h % 2 else t
    return total


def worpitzky_power(k: int, i: int, mode: EvalMode | str = EvalMode.CORRECTED) -> int:
    """sum_j <i j> C(k+j, i); AS_WRITTEN uses the printed C(k+j, j) instead."""
    mode = EvalMode(mode)
    if k < 0 or i < 0:
        raise DomainError("k and i must be natural numbers")
    total = 0
    for j in range(i + 1):
        lower = i if mode is EvalMode.CORRECTED else j
        total += eulerian(i, j) * math.comb(k + j, lower)
    return total


# --- evaluators -------------------------------------------------------------

_Eval = Callable[[EvalMode, Mapping[str, int]], tuple]


def _need(params: Mapping[str, int], *names: str) -> list[int]:
    missing = [n for n in names if n not in params]
    if missing:
        raise UsageError(f"missing parameter(s): {', '.join(missing)}")
    extra = sorted(set(params) - set(names))
    if extra:
        raise UsageError(f"unexpected parameter(s): {', '.join(extra)}")
    vals = [int(params[n]) for n in names]
    for n, v in zip(names, vals):
        if n != "r" and v < 0:
            raise DomainError(f"{n} must be a natural number, got {v}")
    return vals


def _need_nr(params: Mapping[str, int]) -> tuple[int, int]:
    n, r = _need(params, "n", "r")
    if not 0 <= r + 1 <= n:
        raise DomainError(f"need 0 <= r+1 <= n, got n={n}, r={r}")
    return n, r


def _main_sum_rule(mode, params):
    n, r = _need_nr(params)
    q = r + 1
    lhs = 0
    for k in range(n + 1):
        inner = sum(stirling1_signed(q, i) * k**i for i in range(q + 1))
        lhs += inner * rencontres(n, k)
    return lhs, factorial(n)


def _falling_moment(mode, params):
    n, r = _need_nr(params)
    lhs = sum(falling_factorial(k, r + 1) * rencontres(n, k) for k in range(n + 1))
    return lhs, factorial(n)


def _moment_bell(mode, params):
    n, q = _need(params, "n", "q")
    if q > n:
        raise DomainError(f"need q <= n, got q={q}, n={n}")
    lhs = sum(k**q * rencontres(n, k) for k in range(n + 1))
    return lhs, bell(q) * factorial(n)


def _generating_poly(mode, params):
    (n,) = _need(params, "n")
    lhs = IntPolynomial(rencontres(n, k) for k in range(n + 1))
    rhs = IntPolynomial([0])
    t_minus_1 = IntPolynomial([-1, 1])
    nf = factorial(n)
    for i in range(n + 1):
        rhs = rhs + (nf // factorial(i)) * t_minus_1**i
    return lhs.coefficients, rhs.coefficients


def _deutsch_elizalde(mode, params):
    (n,) = _need(params, "n")
    if n < 1:
        raise DomainError("the recurrence holds for n >= 1 (at n = 0 the sum is empty)")
    rhs = sum((k - 1) * binomial(n, k) * derangement(n - k) for k in range(1, n + 1))
    return derangement(n), rhs


def _euler_recurrence(mode, params):
    (n,) = _need(params, "n")
    if n < 2:
        raise DomainError("the recurrence needs n >= 2")
    # closed-form values so the check is not the recurrence that built the cache
    d = derangement_alternating
    return d(n), (n - 1) * (d(n - 1) + d(n - 2))


def _weighted_pnk(mode, params):
    n, k = _need(params, "n", "k")
    if not k < n:
        raise DomainError(f"need k < n, got n={n}, k={k}")
    m = n - k
    rhs = binomial(n, k) * sum((l - 1) * rencontres(m, l) for l in range(1, m + 1))
    return rencontres(n, k), rhs


def _binomial_sum_rule(mode, params):
    n, r = _need_nr(params)
    q = r + 1
    lhs = 0
    for k in range(n + 1):
        inner = sum(stirling1_signed(q, i) * _power_or_vassilev(k, i) for i in range(q + 1))
        lhs += inner * rencontres(n, k)
    return lhs, factorial(n)


def _schlomilch_core(q: int, i: int, mode: EvalMode, lower_shift: Optional[int] = None) -> Fraction:
    """Schlomilch sum for s(q, i) with (h-j)^e re-expanded by the binomial sum.

    CORRECTED keeps the 1/h! weight; AS_WRITTEN drops it as the printed
    quintuple sum does.  ``lower_shift`` replaces h in the lower index of
    C((h-j)(e-t), q-i+h) with that value (the printed final display uses k).
    """
    r = q - 1
    d = q - i
    total = Fraction(0)
    for h in range(d + 1):
        acc = 0
        for j in range(h + 1):
            b = h - j
            e = d + h  # r+1-i+h
            lower = e if lower_shift is None else d + lower_shift
            if b == 0:
                # expansion is only valid for a positive base
                power = 1 if e == 0 else 0
            else:
                power = 0
                for t in range((b - 1) * e // b + 1):
                    c = math.comb(e, t) * math.comb(b * (e - t), lower)
                    power += -c if t % 2 else c
            c = math.comb(h, j) * power
            acc += -c if j % 2 else c
        acc *= _gbinom(r + h, d + h) * math.comb(2 * r + 2 - i, d - h)
        if h % 2:
            acc = -acc
        if mode is EvalMode.CORRECTED:
            total += Fraction(acc, math.factorial(h))
        else:
            total += acc
    return total


def _nested_schlomilch(mode, params):
    n, r = _need_nr(params)
    q = r + 1
    s_cache = [_schlomilch_core(q, i, mode) for i in range(q + 1)]
    lhs = Fraction(0)
    for k in range(n + 1):
        inner = sum(s_cache[i] * _power_or_vassilev(k, i) for i in range(q + 1))
        lhs += inner * rencontres(n, k)
    return lhs, Fraction(factorial(n))


def _normalized_nested(mode, params):
    n, r = _need_nr(params)
    q = r + 1
    if mode is EvalMode.CORRECTED:
        s_cache = [_schlomilch_core(q, i, mode) for i in range(q + 1)]
    lhs = Fraction(0)
    for k in range(n + 1):
        if mode is EvalMode.CORRECTED:
            coeffs = s_cache
        else:
            coeffs = [_schlomilch_core(q, i, mode, lower_shift=k) for i in range(q + 1)]
        inner = sum(coeffs[i] * _power_or_vassilev(k, i) for i in range(q + 1))
        # p_n(k)/n! = (1/k!) sum_m (-1)^m / m!
        tail = sum(Fraction((-1) ** m, math.factorial(m)) for m in range(n - k + 1))
        lhs += inner * Fraction(1, math.factorial(k)) * tail
    return lhs, Fraction(1)


def _bell_double(mode, params):
    (q,) = _need(params, "q")
    lhs = Fraction(0)
    if mode is EvalMode.AS_WRITTEN:
        for k in range(1, q + 1):
            for i in range(1, k + 1):
                lhs += Fraction((-1) ** (k - i) * i**q, math.factorial(k))
    else:
        # S(q,k) = sum_i (-1)^(k-i) i^q / (i!(k-i)!), summed from k = i = 0
        for k in range(q + 1):
            for i in range(k + 1):
                lhs += Fraction((-1) ** (k - i) * i**q, math.factorial(i) * math.factorial(k - i))
    return lhs, Fraction(bell(q))


def _bell_binomial(mode, params):
    n, q = _need(params, "n", "q")
    if q > n:
        raise DomainError(f"need q <= n, got q={q}, n={n}")
    lhs = Fraction(0)
    for k in range(n + 1):
        if k == 0:
            lterms = [(0, 1 if q == 0 else 0)]
        else:
            lterms = [
                (l, math.comb(q, l) * math.comb(k * (q - l), q))
                for l in range((k - 1) * q // k + 1)
            ]
        for l, c in lterms:
            for i in range(n - k + 1):
                lhs += Fraction((-1) ** (l + i) * c, math.factorial(k) * math.factorial(i))
    return lhs, Fraction(bell(q))


def _dobinski_finite(mode, params):
    (q,) = _need(params, "q")
    lhs = sum(Fraction(k**q, math.factorial(k)) for k in range(q + 1))
    rhs = Fraction(bell(q))
    with mpmath.workprec(200):
        residual = mpmath.mpf(lhs.numerator) / lhs.denominator - mpmath.e * rhs.numerator
        return lhs, rhs, float(residual)


_EVALUATORS: dict[IdentityId, _Eval] = {
    IdentityId.MAIN_SUM_RULE: _main_sum_rule,
    IdentityId.FALLING_MOMENT: _falling_moment,
    IdentityId.MOMENT_BELL: _moment_bell,
    IdentityId.GENERATING_POLY: _generating_poly,
    IdentityId.DEUTSCH_ELIZALDE: _deutsch_elizalde,
    IdentityId.EULER_RECURRENCE: _euler_recurrence,
    IdentityId.WEIGHTED_PNK: _weighted_pnk,
    IdentityId.BINOMIAL_SUM_RULE: _binomial_sum_rule,
    IdentityId.NESTED_SCHLOMILCH: _nested_schlomilch,
    IdentityId.NORMALIZED_NESTED: _normalized_nested,
    IdentityId.BELL_DOUBLE: _bell_double,
    IdentityId.BELL_BINOMIAL: _bell_binomial,
    IdentityId.DOBINSKI_FINITE: _dobinski_finite,
}

# parameter names each identity takes, in canonical order
PARAMETERS: dict[IdentityId, tuple[str, ...]] = {
    IdentityId.MAIN_SUM_RULE: ("n", "r"),
    IdentityId.FALLING_MOMENT: ("n", "r"),
    IdentityId.MOMENT_BELL: ("n", "q"),
    IdentityId.GENERATING_POLY: ("n",),
    IdentityId.DEUTSCH_ELIZALDE: ("n",),
    IdentityId.EULER_RECURRENCE: ("n",),
    IdentityId.WEIGHTED_PNK: ("n", "k"),
    IdentityId.BINOMIAL_SUM_RULE: ("n", "r"),
    IdentityId.NESTED_SCHLOMILCH: ("n", "r"),
    IdentityId.NORMALIZED_NESTED: ("n", "r"),
    IdentityId.BELL_DOUBLE: ("q",),
    IdentityId.BELL_BINOMIAL: ("n", "q"),
    IdentityId.DOBINSKI_FINITE: ("q",),
}

# identities whose printed form has an erratum; the others ignore the mode
MODE_SENSITIVE = frozenset(
    {
        IdentityId.NESTED_SCHLOMILCH,
        IdentityId.NORMALIZED_NESTED,
        IdentityId.BELL_DOUBLE,
    }
)


def _as_side(v) -> Side:
    if isinstance(v, tuple):
        return v
    return Fraction(v)


def verify_identity(
    id: IdentityId | str,
    mode: EvalMode | str = EvalMode.CORRECTED,
    params: Optional[Mapping[str, int]] = None,
    **kwargs: int,
) -> IdentityReport:
    """Evaluate both sides of identity ``id`` exactly.

    Parameters may be passed as a mapping, as keywords, or both.

    Raises:
        UsageError: unknown identity, missing or extra parameters.
        DomainError: parameters outside the identity's stated range.
    """
    try:
        ident = IdentityId(id)
    except ValueError:
        raise UsageError(f"unknown identity {id!r}") from None
    try:
        mode = EvalMode(mode)
    except ValueError:
        raise UsageError(f"unknown mode {mode!r}") from None
    p = dict(params or {})
    p.update(kwargs)
    order = PARAMETERS[ident]
    p = dict(sorted(p.items(), key=lambda kv: (kv[0] not in order, order.index(kv[0]) if kv[0] in order else 0, kv[0])))

    start = time.perf_counter()
    out = _EVALUATORS[ident](mode, p)
    elapsed = (time.perf_counter() - start) * 1000.0

    residual = None
    if ident is IdentityId.DOBINSKI_FINITE:
        lhs, rhs, residual = out
        equal = None
    else:
        lhs, rhs = out
        lhs, rhs = _as_side(lhs), _as_side(rhs)
        equal = lhs == rhs
    return IdentityReport(
        id=ident,
        mode=mode,
        params={k: int(v) for k, v in p.items()},
        lhs=lhs,
        rhs=rhs,
        equal=equal,
        elapsed=elapsed,
        residual=residual,
    )
