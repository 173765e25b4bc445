"""
Squarefree values at primes
===========================

For a product G of irreducible polynomials, how often is G(p) squarefree as
p runs over primes? The local factors rho(l^2) predict a density C_G, and a
direct count N_G(X) can be set against it.
"""

from recquint import cg_truncated, density_report, is_prime, ng_count, obstruction_scan, rho_ell2
from recquint.density import FactoredPoly, wreath_family_polynomial

G = wreath_family_polynomial()
print("G(t) =", G.format())

# %%
# rho(l^2) counts units t mod l^2 with l^2 | G(t). A local obstruction is a
# prime where every unit is hit; then C_G = 0.
for ell in (2, 3, 5, 7, 11, 13):
    print(f"rho({ell}^2) = {rho_ell2(G, ell)}")
print("obstruction primes:", obstruction_scan(G))

# %%
# An obstructed example for contrast: four consecutive odd shifts always
# contribute 2^2 or more at odd t.
bad = FactoredPoly.parse("1,1|3,1|5,1|7,1")
print("\nobstructed example:", obstruction_scan(bad), "C_G =", cg_truncated(bad, 50))

# %%
# The truncated product settles quickly. It is an exact fraction.
print()
for L in (10, 100, 1000):
    print(f"C_G truncated at {L:4d}: {float(cg_truncated(G, L)):.6f}")

# %%
# Compare the count of good primes with C_G * pi(X).
cg = float(cg_truncated(G, 1000))
print()
for X in (10**3, 10**4):
    count, certified = ng_count(G, X)
    pi = sum(map(is_prime, range(X + 1)))
    print(f"X={X:5d}  N_G(X)={count:4d}  C_G*pi(X)={cg * pi:7.1f}  certified={certified}")

# %%
# Everything at once, as a serializable report.
rep = density_report(G, 2000, 50)
print("\nreport:", rep.to_dict()["cg_decimal"], rep.ng_count)
