"""Bounds on Stirling and Bell numbers, checked against exact values in log space.

Run with:  python demos/03_bounds_and_asymptotics.py
"""
import mpmath

from rencontres.bounds import (
    bell_asymptotics,
    check_adell,
    check_berend_tal,
    check_lambda_sandwich,
    lambert_w,
)

# %% |s(n+1, m+1)| <= n! (log n)^m / m! (1 + m / log n)
# m = 0 is an equality (|s(n+1,1)| = n!); the slack opens up away from it.
n = 30
for m in (0, 1, 3, 10, 20, 30):
    rep = check_adell(n, m)
    print(f"n={n} m={m:2d} log|s|={float(rep.exact):10.4f} log bound={float(rep.bound):10.4f} slack={float(rep.slack):.4g}")

# %% Sandwich on the absolute-value version of the main sum rule
for n in (6, 10, 20):
    rep = check_lambda_sandwich(n, 4)
    print(f"n={n}, r=4: lower slack {float(rep.extra['lower_slack']):.4f}, upper slack {float(rep.slack):.4f}")

# %% B_n < (0.792 n / log(n+1))^n
for n in (1, 5, 20, 100, 200):
    rep = check_berend_tal(n)
    print(f"n={n:3d} log B_n={float(rep.exact):9.3f} log bound={float(rep.bound):9.3f}")

# %% Lambert W and the asymptotic forms of B_n
for x in (1, 10, 100):
    w = lambert_w(x)
    print(f"W({x}) = {w!r}, residual {w * mpmath.exp(w) - x}")

for n in (10, 50, 100, 200):
    a = bell_asymptotics(n)
    print(f"n={n:3d}: relative log error  de Bruijn {float(a.de_bruijn_error):.3e}  Odlyzko {float(a.odlyzko_error):.3e}")
