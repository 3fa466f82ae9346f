"""Moments of the fixed-point distribution.

Walks through p_n(k), the number of permutations of n elements with
exactly k fixed points, and the sum rules its moments satisfy.

Run with:  python demos/01_fixed_point_sum_rules.py
"""
import math

from rencontres import (
    bell,
    derangement,
    falling_factorial_poly,
    rencontres_row,
    stirling1_signed,
    verify_identity,
)

# %% The rencontres triangle
# Row n lists p_n(0), ..., p_n(n); every row adds up to n!.
for n in range(7):
    row = rencontres_row(n)
    print(f"n={n}: {row}  sum={sum(row)} = {n}!")

# p_n(0) are the derangement numbers d_n.
print("derangements:", [derangement(n) for n in range(12)])

# %% Falling-factorial moments
# sum_k k(k-1)...(k-r) p_n(k) = n! whenever r+1 <= n.
n = 8
for r in range(-1, n):
    lhs = sum(math.perm(k, r + 1) * p for k, p in enumerate(rencontres_row(n)))
    print(f"n={n}, r={r:2d}: sum = {lhs} (n! = {math.factorial(n)})")

# The falling factorial expands over signed Stirling numbers of the first kind.
print("x(x-1)(x-2)(x-3) =", falling_factorial_poly(4))
print("s(4, .) =", [stirling1_signed(4, k) for k in range(5)])

# So the same statement written with monomials holds too.
rep = verify_identity("MAIN_SUM_RULE", n=10, r=4)
print(rep.id.value, rep.params, "lhs =", rep.lhs, "rhs =", rep.rhs, "equal:", rep.equal)

# %% Power moments are Bell numbers times n!
n = 12
for q in range(7):
    lhs = sum(k**q * p for k, p in enumerate(rencontres_row(n)))
    print(f"sum k^{q} p_{n}(k) / {n}! = {lhs // math.factorial(n)}   B_{q} = {bell(q)}")

# Once q exceeds n the equality breaks: the Poisson-like moments only hold for n >= q.
n, q = 3, 5
lhs = sum(k**q * p for k, p in enumerate(rencontres_row(n)))
print(f"n={n}, q={q}: {lhs} vs B_q n! = {bell(q) * math.factorial(n)}")

# %% The generating polynomial
# sum_k t^k p_n(k) = n! sum_{i<=n} (t-1)^i / i!, compared coefficient by coefficient.
rep = verify_identity("GENERATING_POLY", n=5)
print("coefficients:", rep.lhs, "equal:", rep.equal)
