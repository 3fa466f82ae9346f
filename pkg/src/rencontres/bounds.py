"""Numerical checks of the Stirling-1 and Bell bounds and the Lambert-W
asymptotic forms for Bell numbers.

Exact integers are huge, so every comparison happens on natural logs held as
128-bit mpmath floats.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Optional

import mpmath

from .combinat import bell, factorial, rencontres, stirling1_signed

PREC = 128
# exact equality is reached by the Stirling-1 bound at m = 0; absorb rounding
LOG_TOL = mpmath.mpf(2) ** -100
_TOP_BITS = 120


class BoundDomainError(ValueError):
    pass


def log_of_nat(x: int) -> mpmath.mpf:
    """Natural log of a positive integer from its bit length and leading bits."""
    if x < 1:
        raise BoundDomainError("log_of_nat needs x >= 1")
    with mpmath.workprec(PREC):
        shift = max(x.bit_length() - _TOP_BITS, 0)
        top = x >> shift
        return mpmath.log(mpmath.mpf(top)) + shift * mpmath.ln2


def lambert_w(x: float) -> float:
    """Principal branch of the Lambert W function on [0, inf).

    Halley iteration on w e^w - x, started from log1p(x) for small x and
    from log x - log log x + log log x / log x otherwise.  Steps are halved
    while they would overshoot below -1 (never hit for x >= 0 in practice).
    """
    x = float(x)
    if x < 0 or math.isnan(x):
        raise BoundDomainError("lambert_w is only defined here for x >= 0")
    if x == 0.0:
        return 0.0
    if math.isinf(x):
        return math.inf
    if x < 3.0:
        w = math.log1p(x)
    else:
        l1 = math.log(x)
        l2 = math.log(l1)
        w = l1 - l2 + l2 / l1
    for _ in range(100):
        ew = math.exp(w)
        f = w * ew - x
        wp1 = w + 1.0
        dw = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1))
        step = 1.0
        while w - step * dw <= -1.0:
            step *= 0.5
        w -= step * dw
        if abs(dw) <= 4e-16 * (1.0 + abs(w)):
            break
    return w


@dataclass(frozen=True)
class BoundReport:
    """One inequality check in log domain.

    ``exact`` is the log of the true value (None if the value is zero),
    ``bound`` the log of the bound and ``slack = bound - exact``.
    """

    bound_id: str
    params: dict
    exact: Optional[mpmath.mpf]
    bound: mpmath.mpf
    satisfied: bool
    slack: mpmath.mpf
    extra: dict = field(default_factory=dict)


def check_adell(n: int, m: int) -> BoundReport:
    """|s(n+1, m+1)| <= n! (log n)^m / m! * (1 + m / log n)."""
    if n < 2:
        raise BoundDomainError("the bound needs log n > 0, i.e. n >= 2")
    if not 0 <= m <= n:
        raise BoundDomainError("need 0 <= m <= n")
    with mpmath.workprec(PREC):
        ln = mpmath.log(n)
        bound = log_of_nat(factorial(n)) - log_of_nat(factorial(m)) + m * mpmath.log(ln) + mpmath.log1p(m / ln)
        value = abs(stirling1_signed(n + 1, m + 1))
        if value == 0:
            return BoundReport("adell", {"n": n, "m": m}, None, bound, True, mpmath.inf)
        exact = log_of_nat(value)
        return BoundReport("adell", {"n": n, "m": m}, exact, bound, exact <= bound + LOG_TOL, bound - exact)


def lambda_sum(r: int, k: int) -> mpmath.mpf:
    """sum_{i=1}^{r+1} r! (log r)^(i-1) / (i-1)! * (1 + (i-1)/log r) * k^i.

    The i = 0 term carries 1/(-1)! and is taken as zero.
    """
    if r < 2:
        raise BoundDomainError("lambda_sum needs log r > 0, i.e. r >= 2")
    if k < 0:
        raise BoundDomainError("k must be a natural number")
    with mpmath.workprec(PREC):
        lr = mpmath.log(r)
        rf = mpmath.factorial(r)
        total = mpmath.mpf(0)
        for i in range(1, r + 2):
            total += rf * lr ** (i - 1) / mpmath.factorial(i - 1) * (1 + (i - 1) / lr) * mpmath.mpf(k) ** i
        return total


def check_lambda_sandwich(n: int, r: int) -> BoundReport:
    """n! <= sum_k sum_i |s(r+1,i)| k^i p_n(k) <= sum_k lambda_{r,k} p_n(k).

    The report's main slack is the upper one; ``extra`` holds the lower
    inequality (exact integer comparison) and its log slack.
    """
    if r < 2 or r + 1 > n:
        raise BoundDomainError("need r >= 2 and r + 1 <= n")
    q = r + 1
    weights = [abs(stirling1_signed(q, i)) for i in range(q + 1)]
    middle = 0
    for k in range(n + 1):
        middle += sum(w * k**i for i, w in enumerate(weights)) * rencontres(n, k)
    with mpmath.workprec(PREC):
        right = mpmath.fsum(lambda_sum(r, k) * rencontres(n, k) for k in range(n + 1))
        exact = log_of_nat(middle)
        upper = mpmath.log(right)
        lower_ok = factorial(n) <= middle
        upper_ok = exact <= upper + LOG_TOL
        return BoundReport(
            "lambda",
            {"n": n, "r": r},
            exact,
            upper,
            lower_ok and upper_ok,
            upper - exact,
            {
                "lower_satisfied": lower_ok,
                "upper_satisfied": upper_ok,
                "lower_slack": exact - log_of_nat(factorial(n)),
                "lower_tight": middle == factorial(n),
            },
        )


def check_berend_tal(n: int) -> BoundReport:
    """B_n < (0.792 n / log(n+1))^n, compared as logs."""
    if n < 1:
        raise BoundDomainError("need n >= 1")
    with mpmath.workprec(PREC):
        bound = n * (mpmath.log(mpmath.mpf("0.792")) + mpmath.log(n) - mpmath.log(mpmath.log(n + 1)))
        exact = log_of_nat(bell(n))
        return BoundReport("berend-tal", {"n": n}, exact, bound, exact < bound, bound - exact)


@dataclass(frozen=True)
class BellAsymptotics:
    n: int
    exact: mpmath.mpf
    de_bruijn: mpmath.mpf
    odlyzko: mpmath.mpf

    @property
    def de_bruijn_error(self) -> mpmath.mpf:
        return abs(self.de_bruijn - self.exact) / self.exact

    @property
    def odlyzko_error(self) -> mpmath.mpf:
        return abs(self.odlyzko - self.exact) / self.exact


def bell_asymptotics(n: int) -> BellAsymptotics:
    """Logs of the two Lambert-W estimates of B_n next to log B_n."""
    if n < 2:
        raise BoundDomainError("need n >= 2")
    with mpmath.workprec(PREC):
        w = mpmath.mpf(lambert_w(n))
        # one Newton polish in working precision; the float start is good to 1e-16
        ew = mpmath.exp(w)
        w -= (w * ew - n) / (ew * (w + 1))
        ew = mpmath.exp(w)
        ratio = n / w
        de_bruijn = -mpmath.log(n) / 2 + (n + mpmath.mpf(1) / 2) * mpmath.log(ratio) + ratio - n - 1
        odlyzko = (
            log_of_nat(factorial(n))
            - mpmath.log(2 * mpmath.pi * w**2 * ew) / 2
            + (ew - 1)
            - n * mpmath.log(w)
        )
        return BellAsymptotics(n, log_of_nat(bell(n)), de_bruijn, odlyzko)


def asymptotic_trend(ns: Iterable[int]) -> dict[str, bool]:
    """Whether each estimate's relative log error strictly decreases along ``ns``."""
    rows = [bell_asymptotics(n) for n in ns]

    def decreasing(errs):
        return all(b < a for a, b in zip(errs, errs[1:]))

    return {
        "de_bruijn": decreasing([r.de_bruijn_error for r in rows]),
        "odlyzko": decreasing([r.odlyzko_error for r in rows]),
    }
