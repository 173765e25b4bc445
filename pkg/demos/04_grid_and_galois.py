"""
Classifying a grid of parameters
================================

Sweep a box of (A, B) values, decide monogenicity for each, and attach the
Galois group where it is determined. For quartics the answer is C4 or D4;
for octics with A = B = 1 mod 4 it is either the wreath product or not.
"""

from collections import Counter

from recquint import frobenius_fingerprint, grid_classify, octic_wreath, quartic_galois
from recquint.search import csv_summary

# %%
# Quartics with A = B = 1 mod 4.
records = list(grid_classify(2, range(-15, 16), range(-15, 16), residue_filter="mod4-11"))
print(Counter((r.verdict.status.value, r.galois.label.value) for r in records))

# %%
# The C4/D4 decision is exact (is W1 W2 W3 a square?). Frobenius patterns
# give an independent check: a (1)(1)(2) split certifies D4.
print()
for A, B in [(1, 1), (1, 17), (5, 9)]:
    exact = quartic_galois(A, B).label.value
    frob = frobenius_fingerprint(A, B, prime_bound=200)
    print(f"A={A} B={B}: exact {exact}, Frobenius {frob.label.value} after {len(frob.evidence)} primes")

# %%
# Octics: the wreath product appears exactly when none of six products of
# W1, W2, W3 is a square.
print()
for A, B in [(1, -11), (1, -3), (5, -3)]:
    g = octic_wreath(A, B)
    squares = [name for name, _, sq in g.evidence if sq]
    print(f"A={A} B={B}: {g.label.value:13s} square products: {squares or 'none'}")

# %%
# The sweep also exports as CSV.
print()
print(csv_summary(records[:5]), end="")
