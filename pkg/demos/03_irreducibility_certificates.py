"""
Irreducibility with certificates
================================

A reducibility verdict always comes with an explicit factorization that has
been multiplied back out and checked. Irreducible verdicts rest on the
decision procedures for quartics, the octic family and Capelli's theorem.
"""

import json

from recquint import QuinParams, ReducibilityCert, irreducible
from recquint.poly import to_str
from recquint.quintinomial import capelli_reducible, octic_family_membership


def show(n, A, B):
    ok, cert = irreducible(QuinParams(n, A, B))
    if ok:
        print(f"F({n}, {A}, {B}) is irreducible")
        return
    print(f"F({n}, {A}, {B}) = " + " * ".join(f"({to_str(f)})" for f in cert.factors) + f"   [{cert.kind.value}]")


# %%
# Quartics: a rational root or a split into two quadratics.
for A, B in [(3, -5), (2, 2), (2, 3), (4, 5)]:
    show(2, A, B)

# %%
# Octics split along a two-parameter family, with a witness (s, t).
print()
show(3, 1, 5)
cert = octic_family_membership(1, 5)
print("witness:", cert.witness)

# %%
# For n >= 4 the polynomial is G(x^(2^(n-2))) with G a quartic, and Capelli's
# theorem reduces the question to small cases.
print()
show(4, 3, 5)
show(4, -3, 1)
print("Capelli witness:", [to_str(w) for w in capelli_reducible(-3, 1, 2).witness])

# %%
# Certificates round-trip through JSON and are re-verified on load, so a
# tampered certificate is rejected.
d = cert.to_dict()
again = ReducibilityCert.from_dict(json.loads(json.dumps(d)))
print("\nround-trip equal:", again == cert)
d["factors"][0][0] += 1
try:
    ReducibilityCert.from_dict(d)
except ArithmeticError as exc:
    print("tampered certificate rejected:", exc)
