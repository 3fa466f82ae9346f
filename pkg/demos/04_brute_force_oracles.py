"""Enumerate permutations and set partitions and compare with the closed forms.

Run with:  python demos/04_brute_force_oracles.py
"""
from rencontres import combinat
from rencontres.oracle import StatisticId, enumerate_statistic, marked_tuples_literal

n = 6
print("fixed points:", enumerate_statistic(StatisticId.FIXED_POINTS, n).counts)
print("p_6(k):      ", tuple(combinat.rencontres_row(n)))

print("cycles:      ", enumerate_statistic(StatisticId.CYCLES, n).counts)
print("x(x+1)...(x+5):", combinat.rising_factorial_poly(n))

print("ascents:     ", enumerate_statistic(StatisticId.ASCENTS, n).counts)
print("Eulerian:    ", tuple(combinat.eulerian(n, j) for j in range(n)))

row = enumerate_statistic(StatisticId.PARTITION_BLOCKS, 8)
print("blocks (n=8):", row.counts, "total", row.total, "B_8 =", combinat.bell(8))

# A permutation with a marked ordered q-tuple of fixed points (repeats allowed)
# corresponds to a set partition of the q marks; there are B_q n! of them.
for q in range(5):
    literal = marked_tuples_literal(5, q)
    print(f"q={q}: {literal} marked permutations of 5 = B_{q} * 5! = {combinat.bell(q) * 120}")
