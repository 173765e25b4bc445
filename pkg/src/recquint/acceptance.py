"""The twelve acceptance checks, shared by ``recquint verify`` and the test suite.

Every check pairs the library route with an independent one (trial
division, Sylvester determinants, brute-force factor search, box
enumeration) wherever a second route exists.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from typing import Callable

from .dedekind import Status, dedekind_check, is_monogenic, squarefree
from .density import (
    _value_squarefree,
    cg_truncated,
    d4_family_polynomial,
    ng_count,
    obstruction_bound_exhaustive,
    obstruction_scan,
    wreath_family_polynomial,
)
from .ffield import ModPoly, factor_mod, is_prime, mod_reduce
from .galois import GaloisLabel, octic_wreath, quartic_galois
from .lucas_pell import (
    P1_TRIPLES,
    Sign,
    ab_from_pell,
    curve_tables_selfcheck,
    negneg_solutions,
    p1_solutions,
    pell_residue_table_check,
    pell_solution,
    pqr_residual,
    pr_squares,
    verify_lf_identities,
)
from .poly import IntPoly, bareiss_det, discriminant, resultant, sylvester_matrix
from .quintinomial import (
    QuinParams,
    build,
    disc_formula,
    family_cert,
    family_pair,
    invariants,
    irreducible,
    octic_family_membership,
    octic_factor_search,
    quartic_irreducible,
    quin,
)
from .search import distinct_fields, grid_classify, item3_family

PHI5 = IntPoly((1, 1, 1, 1, 1))
PHI10 = IntPoly((1, -1, 1, -1, 1))


@dataclass(frozen=True)
class CriterionResult:
    number: int
    title: str
    ok: bool
    detail: str
    elapsed: float
    limit: float

    @property
    def passed(self) -> bool:
        return self.ok and self.elapsed < self.limit

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        over = "" if self.elapsed < self.limit else f" (over the {self.limit:.0f}s limit)"
        return f"[{mark}] {self.number:2d} {self.title}: {self.detail} [{self.elapsed:.1f}s]{over}"


def _hyp_range(bound: int) -> list[int]:
    return [v for v in range(-bound, bound + 1) if v % 4 == 1]


def _sf_trial(m: int) -> bool:
    """Squarefree test by plain trial division; the oracle for small inputs."""
    m = abs(m)
    d = 2
    while d * d <= m:
        if m % (d * d) == 0:
            return False
        if m % d == 0:
            m //= d
        d += 1
    return True


def c1_discriminant(seed: int = 0) -> tuple[bool, str]:
    rng = random.Random(seed)
    checked = 0
    while checked < 200:
        A, B = rng.randint(-10**4, 10**4), rng.randint(-10**4, 10**4)
        if A * B == 0:
            continue
        for n in (2, 3, 4):
            p = QuinParams(n, A, B)
            if discriminant(build(p)) != disc_formula(p):
                return False, f"mismatch at n={n}, (A,B)=({A},{B})"
        checked += 1
    # the subresultant route itself against Sylvester determinants
    for _ in range(20):
        A, B = rng.randint(-50, 50) or 1, rng.randint(-50, 50) or 1
        f = quin(3, A, B)
        if resultant(f, f.derivative()) != bareiss_det(sylvester_matrix(f, f.derivative())):
            return False, f"resultant disagrees with Sylvester at ({A},{B})"
    return True, "200 pairs x n in {2,3,4} exact"


def c2_item1() -> tuple[bool, str]:
    count = 0
    for A in _hyp_range(101):
        for B in _hyp_range(101):
            inv = invariants(A, B)
            if not quartic_irreducible(A, B)[0]:
                return False, f"F(2,{A},{B}) reducible"
            if (inv.W1 * inv.W2) % 8 != 5 or inv.W3 % 8 != 5:
                return False, f"residues fail at ({A},{B})"
            count += 1
    return True, f"{count} pairs irreducible, W1W2 = W3 = 5 mod 8"


def c3_item2(seed: int = 0) -> tuple[bool, str]:
    count = mono = 0
    for A in _hyp_range(101):
        for B in _hyp_range(101):
            inv = invariants(A, B)
            expect = all(_sf_trial(w) for w in (inv.W1, inv.W2, inv.W3))
            got = is_monogenic(QuinParams(2, A, B), seed).status is Status.MONOGENIC
            if got != expect:
                return False, f"({A},{B}): monogenic={got}, W's squarefree={expect}"
            count += 1
            mono += got
    return True, f"{count} pairs agree ({mono} monogenic)"


def c4_item4(seed: int = 0) -> tuple[bool, str]:
    r = range(-201, 202)
    hits = [
        rec.key[:2]
        for rec in grid_classify(2, r, r, "mod4-11", seed)
        if rec.verdict.status is Status.MONOGENIC and rec.galois.label is GaloisLabel.C4
    ]
    if hits != [(1, 1)]:
        return False, f"Monogenic+C4 pairs {hits}"
    if quin(2, 1, 1) != PHI5 or discriminant(PHI5) != 125 or disc_formula(QuinParams(2, 1, 1)) != 125:
        return False, "disc(Phi5) != 125"
    return True, "only (1,1); disc(Phi5) = 125"


def c5_item3(seed: int = 0) -> tuple[bool, str]:
    notes = []
    for k in (0, 1):
        good = []
        for rec in item3_family(k, range(2, 100_000), seed):
            if rec.g_squarefree:
                if rec.verdict.status is not Status.MONOGENIC or rec.galois.label is not GaloisLabel.D4:
                    return False, f"k={k}, B={rec.params.B}: {rec.verdict.status.value}/{rec.galois.label.value}"
                good.append(rec)
                if len(good) == 10:
                    break
        part = distinct_fields(good)
        if len(good) < 10 or not part.all_distinct or len(part.classes) != 10:
            return False, f"k={k}: {len(part.classes)} distinct fields from {len(good)} records"
        notes.append(f"k={k}: p<={(good[-1].params.B - 1) // 8}")
    return True, "10 Monogenic/D4, 10 distinct discriminants each; " + ", ".join(notes)


def _family_box(bound_A: int, bound_B: int) -> set[tuple[int, int]]:
    # (2t+1)^2 = B + 8m (case 1) or B - 8m - 4 (case 2) with m = t - (A-1)/4 >= 0,
    # so |A|, |B| <= 10^4 forces |t| < 100 and s(s+1) < 2600: the box below is complete
    out = set()
    for s in range(-120, 121):
        for t in range(-200, 201):
            for A, B, _ in family_pair(s, t):
                if abs(A) <= bound_A and abs(B) <= bound_B:
                    out.add((A, B))
    return out


def c6_item5(seed: int = 0) -> tuple[bool, str]:
    for s in range(-6, 7):
        for t in range(-6, 7):
            for case in (1, 2):
                cert = family_cert(s, t, case)
                prod = cert.factors[0] * cert.factors[1]
                (A, B1, _), (_, B2, _) = family_pair(s, t)
                B = B1 if case == 1 else B2
                if prod != quin(3, A, B):
                    return False, f"family product fails at s={s}, t={t}, case {case}"
    members = _family_box(10**4, 10**4)
    rng = random.Random(seed)
    non = set()
    while len(non) < 500:
        A, B = 4 * rng.randint(-2500, 2499) + 1, 4 * rng.randint(-2500, 2499) + 1
        if (A, B) not in members:
            non.add((A, B))
    for A, B in sorted(non):
        if octic_family_membership(A, B) is not None:
            return False, f"({A},{B}) reported as member"
    small = [(A, B) for A in _hyp_range(21) for B in _hyp_range(21)]
    brute_hits = 0
    for A, B in small:
        fam = octic_family_membership(A, B) is not None
        brute = octic_factor_search(A, B) is not None
        if fam != brute:
            return False, f"membership {fam} vs brute search {brute} at ({A},{B})"
        brute_hits += brute
    return True, f"338 family products exact; 500 non-members; {len(small)} small pairs agree ({brute_hits} reducible)"


def c7_items78(seed: int = 0) -> tuple[bool, str]:
    target = (IntPoly((0, 1)) * IntPoly((1, 1)) ** 2 * PHI5)
    tbar = mod_reduce(target, 2)
    count = 0
    for A in _hyp_range(401):
        if A == 1:
            continue
        p = QuinParams(3, A, A)
        if not irreducible(p)[0]:
            return False, f"F(3,{A},{A}) reducible"
        out = dedekind_check(build(p), 2, seed)
        if not out.divides_index or mod_reduce(out.F, 2) != tbar:
            return False, f"Dedekind at q=2 fails for A={A}"
        count += 1
    ok, cert = irreducible(QuinParams(3, 1, 1))
    if ok or PHI5 * PHI10 != quin(3, 1, 1) or set(cert.factors) != {PHI5, PHI10}:
        return False, "F(3,1,1) != Phi5 Phi10"
    return True, f"{count} values of A; F(3,1,1) = Phi5 Phi10"


def c8_item6() -> tuple[bool, str]:
    G = wreath_family_polynomial()
    wreath = []
    for p in range(2, 250):
        if not is_prime(p) or 4 * p + 1 > 1000:
            continue
        if not _value_squarefree(G, p, 10**6):
            continue
        A = 4 * p + 1
        inv = invariants(A, A)
        if G(p) != -(inv.W1 * inv.W2 * inv.W3):
            return False, f"G({p}) disagrees with W1W2W3"
        label = octic_wreath(A, A).label
        if label is not GaloisLabel.WREATH:
            return False, f"A={A}: {label.value}"
        wreath.append(A)
    if len(wreath) < 10 or 9 not in wreath:
        return False, f"only {wreath}"
    return True, f"{len(wreath)} values, first {wreath[:5]}"


def c9_bams(seed: int = 0) -> tuple[bool, str]:
    rng = random.Random(seed)
    seen = set()
    while len(seen) < 200:
        A, B = rng.randint(-1000, 1000), rng.randint(-1000, 1000)
        if (A % 4, B % 4) not in {(1, 3), (3, 1), (3, 3)} or (A, B) in seen:
            continue
        inv = invariants(A, B)
        if squarefree(inv.W1 * inv.W2 * inv.W3) is not True:
            continue
        seen.add((A, B))
    for A, B in sorted(seen):
        for n in (2, 3):
            v = is_monogenic(QuinParams(n, A, B), seed)
            if v.status is not Status.MONOGENIC:
                return False, f"n={n}, ({A},{B}): {v.status.value} {v.reason}"
    return True, "200 pairs Monogenic at n = 2 and 3"


def c10_lucas_pell() -> tuple[bool, str]:
    if not verify_lf_identities(60):
        return False, "Lucas/Fibonacci identities"
    for n in range(1, 31):
        X, Y = pell_solution(n)
        if X * X - 5 * Y * Y != -4:
            return False, f"Pell fails at n={n}"
        ab = ab_from_pell(n)
        if (ab is None) != (n % 3 == 2):
            return False, f"ab_from_pell classification at n={n}"
        if ab is not None:
            inv = invariants(*ab)
            if inv.W1 * inv.W2 != inv.W3:
                return False, f"W1W2 != W3 at n={n}"
        sq = pr_squares(n)
        if sq is not None and sq[0] != sq[1] ** 2:
            return False, f"square identity fails at n={n}"
    if not pell_residue_table_check(200):
        return False, "residue table"
    if sorted(p1_solutions()) != sorted(P1_TRIPLES):
        return False, f"P=1 solutions {p1_solutions()}"
    if any(pqr_residual(*t, Sign.POS_POS) for t in P1_TRIPLES):
        return False, "residual nonzero on a P=1 triple"
    if negneg_solutions(100):
        return False, "NegNeg solutions exist"
    if not curve_tables_selfcheck():
        return False, "curve tables"
    return True, "identities, Pell n<=30, residues n<=200, squares, P=1 triples, no NegNeg"


def c11_density() -> tuple[bool, str]:
    if obstruction_scan(wreath_family_polynomial()):
        return False, "item 6 polynomial obstructed"
    for k in range(-3, 4):
        if obstruction_scan(d4_family_polynomial(k)):
            return False, f"item 3 polynomial obstructed at k={k}"
    bc = obstruction_bound_exhaustive(4, 5)
    if not bc.holds:
        return False, f"bound violated: {bc.violations[:3]}"
    cg = cg_truncated(wreath_family_polynomial(), 100)
    if not 0 < cg < 1:
        return False, f"C_G = {float(cg)}"
    count, certified = ng_count(wreath_family_polynomial(), 10**4)
    if count < 10 or not certified:
        return False, f"N_G(10^4) = {count}, certified={certified}"
    return True, f"no obstructions; bound holds on {bc.polynomials} G; C_G ~ {float(cg):.4f}; N_G(10^4) = {count}"


_FUZZ_PRIMES = (2, 3, 5, 7, 11, 13)


def c12_lifts(seed: int = 0) -> tuple[bool, str]:
    rng = random.Random(seed)
    for _ in range(500):
        d = rng.randint(2, 8)
        T = IntPoly(tuple(rng.randint(-30, 30) for _ in range(d)) + (1,))
        q = rng.choice(_FUZZ_PRIMES)
        a = dedekind_check(T, q, seed)
        b = dedekind_check(T, q, seed, symmetric_lift=True)
        if a.divides_index != b.divides_index:
            return False, f"lift dependence for {T} at q={q}"
    for _ in range(500):
        q = rng.choice(_FUZZ_PRIMES + (17, 101))
        coeffs = [rng.randrange(q) for _ in range(rng.randint(1, 12))]
        coeffs.append(rng.randrange(1, q))
        f = ModPoly(q, coeffs)
        fac = factor_mod(f, rng.randrange(1 << 30))
        if fac.expand() != f:
            return False, f"reassembly fails for {coeffs} mod {q}"
    return True, "500 lift pairs agree; 500 factorizations reassemble"


@dataclass(frozen=True)
class Criterion:
    number: int
    title: str
    run: Callable[[int], tuple[bool, str]]
    limit: float


def _seeded(f):
    return lambda seed: f(seed)


def _unseeded(f):
    return lambda seed: f()


CRITERIA = (
    Criterion(1, "discriminant formula", _seeded(c1_discriminant), 30),
    Criterion(2, "item 1: irreducible quartics, residues mod 8", _unseeded(c2_item1), 10),
    Criterion(3, "item 2: monogenic iff W1, W2, W3 squarefree", _seeded(c3_item2), 60),
    Criterion(4, "item 4: (1,1) is the only Monogenic C4", _seeded(c4_item4), 300),
    Criterion(5, "item 3: Monogenic D4 family, distinct fields", _seeded(c5_item3), 60),
    Criterion(6, "item 5: reducible octic family", _seeded(c6_item5), 300),
    Criterion(7, "items 7, 8: F(3,A,A) and F(3,1,1)", _seeded(c7_items78), 60),
    Criterion(8, "item 6: wreath-product octics", _unseeded(c8_item6), 60),
    Criterion(9, "BAMS residues: squarefree product gives Monogenic", _seeded(c9_bams), 120),
    Criterion(10, "Lucas, Fibonacci and Pell chain", _unseeded(c10_lucas_pell), 30),
    Criterion(11, "squarefree density", _unseeded(c11_density), 300),
    Criterion(12, "lift independence and factor reassembly", _seeded(c12_lifts), 60),
)


def run_criterion(c: Criterion, seed: int = 0) -> CriterionResult:
    start = time.perf_counter()
    try:
        ok, detail = c.run(seed)
    except Exception as exc:  # a crash is a failure, reported rather than raised
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    return CriterionResult(c.number, c.title, ok, detail, time.perf_counter() - start, c.limit)


def run_all(seed: int = 0, only: tuple[int, ...] | None = None):
    for c in CRITERIA:
        if only is None or c.number in only:
            yield run_criterion(c, seed)
