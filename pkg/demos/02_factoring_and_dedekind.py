"""
Factoring mod p and Dedekind's criterion
========================================

Monogenicity of F(n, A, B) comes down to checking, prime by prime, whether
p divides the index of Z[theta]. The check needs a factorization of F mod p,
so both pieces are shown here.
"""

from recquint import QuinParams, dedekind_check, disc_formula, factor_integer, factor_mod, is_monogenic, quin
from recquint.ffield import mod_reduce

f = quin(3, 9, 9)

# %%
# Factor F(3, 9, 9) modulo a few small primes. The pattern lists
# (degree, multiplicity) pairs.
for q in (2, 3, 5, 7, 11):
    fac = factor_mod(mod_reduce(f, q))
    print(f"mod {q:2d}: pattern {fac.pattern()}  reassembles: {fac.expand() == mod_reduce(f, q)}")

# %%
# Only primes whose square divides the discriminant can divide the index.
# Factoring the discriminant gives the candidates.
disc = disc_formula(QuinParams(3, 9, 9))
print("\ndisc =", disc)
print("factored:", factor_integer(disc))

# %%
# Dedekind's criterion at p = 2. The canonical and symmetric lifts must
# give the same answer.
for sym in (False, True):
    out = dedekind_check(f, 2, symmetric_lift=sym)
    print(f"symmetric_lift={sym}: 2 divides index -> {out.divides_index}")

# %%
# Putting it together: the full verdict, with the offending primes.
for n, A, B in [(3, 9, 9), (3, 1, 5), (2, 1, 1), (2, -3, 5)]:
    v = is_monogenic(QuinParams(n, A, B))
    print(f"F({n}, {A}, {B}): {v.status.value:13s} obstruction primes {v.obstruction_primes}")
