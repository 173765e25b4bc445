"""
Pell solutions and the W1 W2 = W3 locus
=======================================

Solutions of X^2 - 5Y^2 = -4 are Lucas/Fibonacci pairs. They produce the
(A, B) with W1 W2 = W3, and Lucas-number square identities show why
those pairs almost never give squarefree invariants.
"""

from recquint import invariants, squarefree
from recquint.lucas_pell import (
    ELLIPTIC_POINTS,
    P1_TRIPLES,
    Sign,
    ab_from_pell,
    fib,
    lucas,
    pell_solution,
    pqr_residual,
    pr_squares,
    verify_lf_identities,
)

# %%
# Negative indices follow sign rules; the identities are checked both ways.
print("L_-5, F_-4 =", lucas(-5), fib(-4))
print("identities hold up to |N| = 200:", verify_lf_identities(200))

# %%
# Pell solutions (L_{2n-1}, F_{2n-1}) and the (A, B) they give. n = 2 mod 3
# has the wrong residues and is skipped.
print()
for n in range(1, 11):
    X, Y = pell_solution(n)
    ab = ab_from_pell(n)
    if ab is None:
        print(f"n={n:2d}  (X, Y)=({X}, {Y})  no admissible (A, B)")
        continue
    inv = invariants(*ab)
    sf = squarefree(inv.W1) and squarefree(inv.W2)
    print(f"n={n:2d}  (A, B)={ab}  W1*W2 == W3: {inv.W1 * inv.W2 == inv.W3}  W1, W2 squarefree: {sf}")

# %%
# The obstruction: for n = 1 or 4 mod 6 one of W1, W2 is a perfect square,
# namely a Lucas number squared.
print()
for n in (1, 4, 7, 10, 13):
    W, root = pr_squares(n)
    print(f"n={n:2d}: {W} = ({root})^2")

# %%
# The (P, Q, R) quartic relation and the points behind its solution list.
print()
for t in P1_TRIPLES:
    print(t, "residual", pqr_residual(*t, Sign.POS_POS))
print("elliptic curve points used:", ELLIPTIC_POINTS)
