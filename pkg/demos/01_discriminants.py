"""
Discriminants of the reciprocal quintinomials
=============================================

The discriminant of F(n, A, B) has a closed form in three small invariants.
We compute it twice (from the closed form and from a subresultant
resultant) and watch the two agree.
"""

from recquint import QuinParams, disc_formula, discriminant, invariants, quin
from recquint.poly import bareiss_det, sylvester_matrix, to_str

# %%
# The polynomial itself. n controls the degree 2^n; the exponents of the
# middle terms are fixed fractions of it.
for n in (2, 3, 4):
    print(f"n={n}:", to_str(quin(n, 3, -5)))

# %%
# W1, W2, W3 carry all of the arithmetic.
inv = invariants(3, -5)
print("\nW1, W2, W3 =", inv.W1, inv.W2, inv.W3)

# %%
# Closed form against the generic resultant, for a handful of parameters.
print()
for n, A, B in [(2, 3, -5), (2, 1, 17), (3, -7, 9), (3, 5, 1)]:
    closed = disc_formula(QuinParams(n, A, B))
    direct = discriminant(quin(n, A, B))
    print(f"n={n} A={A:3d} B={B:3d}  closed == resultant: {closed == direct}  ({closed})")

# %%
# A third route for small degree: the Sylvester determinant of f and f',
# computed by fraction-free elimination. The sign and leading-coefficient
# factor are the usual ones for a monic quartic.
f = quin(2, 3, -5)
det = bareiss_det(sylvester_matrix(f, f.derivative()))
print("\nSylvester route:", det == discriminant(f))
