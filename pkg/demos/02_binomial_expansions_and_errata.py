"""Binomial expansions of k^i and s(q, i), and where the printed formulas slip.

Run with:  python demos/02_binomial_expansions_and_errata.py
"""
from rencontres import (
    EvalMode,
    schlomilch_stirling1,
    stirling1_signed,
    vassilev_power,
    verify_identity,
    worpitzky_power,
)
from rencontres.oracle import appendix_c_coefficient

# %% k^i as an alternating binomial sum
for k in range(1, 5):
    print(k, [vassilev_power(k, i) for i in range(6)])

# The same number is the coefficient of x^((k-1)i) in ((1+x)^k - x^k)^i.
print("coefficient extraction (3, 4):", appendix_c_coefficient(3, 4), "= 3^4 =", 3**4)

# %% Worpitzky: the lower binomial index matters
print("corrected  sum_j <2 j> C(3+j, 2) =", worpitzky_power(3, 2, EvalMode.CORRECTED))
print("as printed sum_j <2 j> C(3+j, j) =", worpitzky_power(3, 2, EvalMode.AS_WRITTEN), "(not 9)")

# %% Schlomilch double sum for Stirling numbers of the first kind
for q in range(6):
    print(q, [schlomilch_stirling1(q, i) for i in range(q + 1)], [stirling1_signed(q, i) for i in range(q + 1)])

# %% Nested identities
# Substituting both expansions into the main sum rule still gives n! exactly...
for ident in ("BINOMIAL_SUM_RULE", "NESTED_SCHLOMILCH", "NORMALIZED_NESTED"):
    rep = verify_identity(ident, EvalMode.CORRECTED, n=6, r=3)
    print(f"{ident:18s} lhs={rep.lhs} rhs={rep.rhs} equal={rep.equal}")

# ...but only with the 1/h! weight of the Schlomilch sum kept.  The displayed
# quintuple sum omits it, which is harmless while h <= 1, i.e. r + 1 <= 2.
for r in range(-1, 5):
    rep = verify_identity("NESTED_SCHLOMILCH", EvalMode.AS_WRITTEN, n=5, r=r)
    print(f"as printed, n=5 r={r:2d}: lhs={rep.lhs} equal={rep.equal}")

# %% Bell numbers from a double sum
# Printed with 1/k! the double sum overshoots; with 1/(i!(k-i)!) it is the
# Stirling-2 expansion summed over k and reproduces B_q.
for q in range(6):
    aw = verify_identity("BELL_DOUBLE", EvalMode.AS_WRITTEN, q=q)
    co = verify_identity("BELL_DOUBLE", EvalMode.CORRECTED, q=q)
    print(f"q={q}: as printed {aw.lhs}, corrected {co.lhs}, B_q = {co.rhs}")

# Dobinski with a finite upper limit is only an approximation of e * B_q.
for q in range(1, 8):
    rep = verify_identity("DOBINSKI_FINITE", q=q)
    print(f"q={q}: sum_k<=q k^q/k! - e B_q = {rep.residual:.6g}")
