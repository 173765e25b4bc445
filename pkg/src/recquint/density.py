"""Squarefree values of factored polynomials at primes.

For G(t) a product of distinct irreducible factors of degree at most 3,
rho(l^2) counts units z mod l^2 with G(z) = 0 mod l^2.  G has a local
obstruction at l when every unit is such a zero; the truncated Euler product
prod(1 - rho(l^2) / (l(l-1))) is then zero.  An obstruction at l forces
l <= (N_l + 2)/2, with N_l the number of linear factors of G mod l counted
with multiplicity, so only a handful of small primes need scanning.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iproduct
from math import comb, gcd

from .dedekind import DEFAULT_BUDGET, _factor_partial
from .ffield import is_prime, linear_factor_count
from .poly import IntPoly, content_and_primitive

DEFAULT_TRUNCATION = 100


def _divisors(n: int) -> list[int]:
    n = abs(n)
    out = [d for d in range(1, int(n**0.5) + 1) if n % d == 0]
    return sorted(set(out + [n // d for d in out]))


def has_rational_root(f: IntPoly) -> bool:
    if f[0] == 0:
        return True
    for s in _divisors(f.lc):
        for r in _divisors(f[0]):
            if gcd(r, s) != 1:
                continue
            for num in (r, -r):
                # f(num/s) * s^deg
                acc = 0
                for i, c in enumerate(f.coeffs):
                    acc += c * num**i * s ** (f.degree - i)
                if acc == 0:
                    return True
    return False


def _normalize(f: IntPoly) -> IntPoly:
    return -f if f.lc < 0 else f


@dataclass(frozen=True)
class FactoredPoly:
    factors: tuple[IntPoly, ...]

    def __post_init__(self):
        fs = tuple(IntPoly(tuple(f.coeffs)) if not isinstance(f, IntPoly) else f for f in self.factors)
        if not fs:
            raise ValueError("need at least one factor")
        seen = set()
        for f in fs:
            if not 1 <= f.degree <= 3:
                raise ValueError(f"factor {f} must have degree 1, 2 or 3")
            if content_and_primitive(f)[0] != 1:
                raise ValueError(f"factor {f} is not primitive")
            if f.degree > 1 and has_rational_root(f):
                raise ValueError(f"factor {f} is reducible over Z")
            key = _normalize(f)
            if key in seen:
                raise ValueError("factors must be pairwise distinct")
            seen.add(key)
        object.__setattr__(self, "factors", fs)

    @classmethod
    def parse(cls, text: str) -> FactoredPoly:
        """``"c0,c1|c0,c1,c2"``: ascending coefficients per factor, ``|`` separated."""
        return cls(tuple(IntPoly.parse(part) for part in text.split("|")))

    def format(self) -> str:
        return "|".join(f.format() for f in self.factors)

    @property
    def degree(self) -> int:
        return sum(f.degree for f in self.factors)

    def expand(self) -> IntPoly:
        out = IntPoly((1,))
        for f in self.factors:
            out = out * f
        return out

    def __call__(self, t: int) -> int:
        out = 1
        for f in self.factors:
            out *= f(t)
        return out


def _require_prime(ell: int):
    if not is_prime(ell):
        raise ValueError(f"{ell} is not prime")


def rho_ell2(G: FactoredPoly, ell: int) -> int:
    _require_prime(ell)
    mod = ell * ell
    g = G.expand()
    # only lifts of roots mod l can reach l^2
    roots = [r for r in range(1, ell) if _eval_mod(g, r, ell) == 0]
    return sum(1 for r in roots for j in range(ell) if _eval_mod(g, r + j * ell, mod) == 0)


def _eval_mod(g: IntPoly, z: int, m: int) -> int:
    acc = 0
    for c in reversed(g.coeffs):
        acc = (acc * z + c) % m
    return acc


def has_local_obstruction(G: FactoredPoly, ell: int) -> bool:
    return rho_ell2(G, ell) == ell * (ell - 1)


def linear_count(G: FactoredPoly, ell: int) -> int:
    """N_l: linear factors of G mod l with multiplicity."""
    return sum(linear_factor_count(f, ell) for f in G.factors)


def obstruction_candidates(G: FactoredPoly) -> list[int]:
    """Primes l <= (deg G + 2)/2, the coarse form of the obstruction bound."""
    top = (G.degree + 2) // 2
    return [ell for ell in range(2, top + 1) if is_prime(ell)]


def obstruction_scan(G: FactoredPoly) -> list[int]:
    out = []
    for ell in obstruction_candidates(G):
        if 2 * ell > linear_count(G, ell) + 2:
            continue
        if has_local_obstruction(G, ell):
            out.append(ell)
    return out


def _primes_upto(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, int(n**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [i for i, v in enumerate(sieve) if v]


def cg_truncated(G: FactoredPoly, L: int = DEFAULT_TRUNCATION) -> Fraction:
    if L < 2:
        raise ValueError("truncation bound must be at least 2")
    out = Fraction(1)
    for ell in _primes_upto(L):
        out *= 1 - Fraction(rho_ell2(G, ell), ell * (ell - 1))
    return out


def _value_squarefree(G: FactoredPoly, t: int, budget: int) -> bool | None:
    exps: Counter = Counter()
    cofs = []
    for f in G.factors:
        v = f(t)
        if v == 0:
            return False
        primes, cof = _factor_partial(v, budget)
        exps.update(primes)
        if cof != 1:
            cofs.append(cof)
    if any(e > 1 for e in exps.values()):
        return False
    if not cofs:
        return True
    for i, c in enumerate(cofs):
        if any(c % p == 0 for p in exps) or any(gcd(c, d) > 1 for d in cofs[i + 1 :]):
            return False
    return None


def ng_count(G: FactoredPoly, X: int, budget: int = DEFAULT_BUDGET) -> tuple[int, bool]:
    """Count primes p <= X with G(p) squarefree; certified=False if any p was undecided."""
    if X < 2:
        raise ValueError("X must be at least 2")
    count, certified = 0, True
    for p in _primes_upto(X):
        sf = _value_squarefree(G, p, budget)
        if sf is None:
            certified = False
        elif sf:
            count += 1
    return count, certified


def squarefree_primes(G: FactoredPoly, how_many: int, start: int = 2, budget: int = DEFAULT_BUDGET):
    """Yield the first primes p >= start with G(p) certified squarefree."""
    found = 0
    p = start
    while found < how_many:
        if is_prime(p) and _value_squarefree(G, p, budget):
            found += 1
            yield p
        p += 1


@dataclass(frozen=True)
class DensityReport:
    obstruction_primes: tuple[int, ...]
    rho_table: tuple[tuple[int, int, int], ...]
    cg_truncated: Fraction
    truncation_bound: int
    ng_count: tuple[int, int]
    certified: bool

    def to_dict(self) -> dict:
        return {
            "obstruction_primes": list(self.obstruction_primes),
            "rho_table": [list(r) for r in self.rho_table],
            "cg_truncated": f"{self.cg_truncated.numerator}/{self.cg_truncated.denominator}",
            "cg_decimal": f"{float(self.cg_truncated):.12f}",
            "truncation_bound": self.truncation_bound,
            "ng_count": list(self.ng_count),
            "certified": self.certified,
        }

    @classmethod
    def from_dict(cls, d: dict) -> DensityReport:
        return cls(
            tuple(d["obstruction_primes"]),
            tuple(tuple(r) for r in d["rho_table"]),
            Fraction(d["cg_truncated"]),
            d["truncation_bound"],
            tuple(d["ng_count"]),
            d["certified"],
        )


def density_report(G: FactoredPoly, X: int, L: int = DEFAULT_TRUNCATION, budget: int = DEFAULT_BUDGET) -> DensityReport:
    table = tuple((ell, rho_ell2(G, ell), ell * (ell - 1)) for ell in _primes_upto(L))
    cg = Fraction(1)
    for ell, rho, phi in table:
        cg *= 1 - Fraction(rho, phi)
    count, certified = ng_count(G, X, budget)
    return DensityReport(tuple(obstruction_scan(G)), table, cg, L, (X, count), certified)


def wreath_family_polynomial() -> FactoredPoly:
    """W1 W2 W3 for A = 4t + 1 (up to the sign of W1): (4t-1)(12t+5)(16t^2-8t+5)."""
    return FactoredPoly((IntPoly((-1, 4)), IntPoly((5, 12)), IntPoly((5, -8, 16))))


def d4_family_polynomial(k: int) -> FactoredPoly:
    """W1 W2 W3 for (A, B) = (8k+1, 8t+1), with W3 = A^2 - 4B + 8."""
    return FactoredPoly(
        (
            IntPoly((1 - 16 * k, 8)),
            IntPoly((16 * k + 5, 8)),
            IntPoly((64 * k * k + 16 * k + 5, -32)),
        )
    )


# exhaustive re-check of the obstruction bound

def _primitive_irreducibles(max_deg: int, cmax: int) -> list[IntPoly]:
    out = []
    rng = range(-cmax, cmax + 1)
    for d in range(1, max_deg + 1):
        for lead in range(1, cmax + 1):
            for rest in iproduct(rng, repeat=d):
                f = IntPoly(tuple(rest) + (lead,))
                if content_and_primitive(f)[0] != 1:
                    continue
                if d > 1 and has_rational_root(f):
                    continue
                out.append(f)
    return out


def _capped_valuations(f: IntPoly, ell: int) -> tuple[int, ...]:
    mod = ell * ell
    vals = []
    for z in range(1, mod):
        if z % ell == 0:
            continue
        v = f(z) % mod
        vals.append(2 if v == 0 else (1 if v % ell == 0 else 0))
    return tuple(vals)


@dataclass(frozen=True)
class BoundCheck:
    polynomials: int
    obstructed: int
    violations: tuple

    @property
    def holds(self) -> bool:
        return not self.violations


def obstruction_bound_exhaustive(max_deg: int = 4, cmax: int = 5) -> BoundCheck:
    """Check l <= (N_l + 2)/2 at every obstructed prime, for all G of degree <= max_deg.

    G ranges over products of distinct primitive irreducible factors of degree
    <= 3 with coefficients in [-cmax, cmax] (sign-normalized, since -f gives
    the same G up to a unit).  Only l <= max_deg + 1 can obstruct, because
    G mod l is a nonzero polynomial of degree <= max_deg vanishing at all
    l - 1 units.  Factors are grouped into classes by (degree, capped
    l-adic valuations on the units mod l^2, linear count mod l); G's
    obstruction and N_l depend only on the multiset of classes, so every G
    is covered while the enumeration runs over class multisets.
    """
    factors = _primitive_irreducibles(min(3, max_deg), cmax)
    total_polys = 0
    obstructed = 0
    violations = []
    ells = [ell for ell in range(2, max_deg + 2) if is_prime(ell)]
    for ell in ells:
        classes = Counter(
            (f.degree, _capped_valuations(f, ell), linear_factor_count(f, ell)) for f in factors
        )
        keys = sorted(classes)
        units = ell * (ell - 1)

        def rec(start, deg, vals, nlin, ways, picked):
            nonlocal total_polys, obstructed
            if picked:
                if ell == ells[0]:
                    total_polys += ways
                if all(v >= 2 for v in vals):
                    obstructed += ways
                    if 2 * ell > nlin + 2:
                        violations.append((ell, deg, nlin))
            for i in range(start, len(keys)):
                d, vv, nl = keys[i]
                cnt = classes[keys[i]]
                for mult in range(1, cnt + 1):
                    if deg + mult * d > max_deg:
                        break
                    newvals = tuple(a + mult * b for a, b in zip(vals, vv))
                    rec(i + 1, deg + mult * d, newvals, nlin + mult * nl, ways * comb(cnt, mult), True)

        rec(0, 0, (0,) * units, 0, 1, False)
    return BoundCheck(total_polys, obstructed, tuple(violations))
