"""Exact combinatorics of permutations with fixed points.

Rencontres numbers, derangements, Stirling numbers of both kinds, Bell and
Eulerian numbers, plus exact checkers for the sum rules that tie them
together and brute-force enumerators to cross-examine every closed form.
"""
from .combinat import (
    TriangleCache,
    bell,
    binomial,
    derangement,
    derangement_alternating,
    eulerian,
    factorial,
    falling_factorial_poly,
    rencontres,
    rencontres_row,
    rising_factorial_poly,
    stirling1_signed,
    stirling1_unsigned,
    stirling2,
    stirling2_recurrence,
)
from .identities import (
    DomainError,
    EvalMode,
    IdentityId,
    IdentityReport,
    UsageError,
    schlomilch_stirling1,
    vassilev_power,
    verify_identity,
    worpitzky_power,
)
from .oracle import ResourceLimitError, StatisticId, StatRow, appendix_c_coefficient, enumerate_statistic
from .polynomial import IntPolynomial

__version__ = "0.1.0"
