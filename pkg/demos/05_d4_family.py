"""
A family of D4 quartics
=======================

Fix k and let B = 8t + 1 with t prime. Whenever G(t) = W1 W2 W3 is
squarefree, F(2, 8k+1, 8t+1) is monogenic with Galois group D4. Different
t give different fields, which the field discriminants confirm directly.
"""

from recquint import distinct_fields, item3_family
from recquint.density import d4_family_polynomial

# %%
# G for k = 0, as a product of its irreducible factors in t.
G = d4_family_polynomial(0)
print("G(t) =", G.format())

# %%
# Walk the first primes t. Records where G(t) is not squarefree are kept
# but carry no guarantee.
good = []
for rec in item3_family(0, range(2, 60)):
    print(
        f"t={(rec.params.B - 1) // 8:3d}  B={rec.params.B:4d}  G squarefree={str(rec.g_squarefree):5s}"
        f"  {rec.verdict.status.value:12s} {rec.galois.label.value}"
    )
    if rec.g_squarefree:
        good.append(rec)

# %%
# Group the good records by field discriminant. All classes are singletons,
# so the fields are pairwise distinct.
part = distinct_fields(good)
print(f"\n{len(good)} records, {len(part.classes)} distinct discriminants, all distinct: {part.all_distinct}")
