"""Reciprocal quintinomials and their irreducibility.

For n >= 2 the polynomial is

    F(n, A, B) = x^(2^n) + A x^(3*2^(n-2)) + B x^(2^(n-1)) + A x^(2^(n-2)) + 1

so F(n, A, B)(x) = F(2, A, B)(x^(2^(n-2))).  Irreducibility is decided
exactly: the quartic by its rational roots and quadratic splittings, the
octic under A = B = 1 (mod 4) by the explicit two-parameter family, and in
general by solving the finite coefficient systems for ``w = S0^2 - x S1^2``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from math import comb, gcd, isqrt

from .poly import IntPoly

MAX_BUILD_N = 12
MAX_DECIDE_N = 5


@dataclass(frozen=True)
class QuinParams:
    n: int
    A: int
    B: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("n must be at least 2")
        if self.A * self.B == 0:
            raise ValueError("A*B must be nonzero")

    def in_hypothesis(self) -> bool:
        return self.A % 4 == 1 and self.B % 4 == 1


@dataclass(frozen=True)
class QuinInvariants:
    W1: int
    W2: int
    W3: int
    P: int
    Q: int
    R: int

    def to_dict(self) -> dict:
        return dict(W1=self.W1, W2=self.W2, W3=self.W3, P=self.P, Q=self.Q, R=self.R)

    @classmethod
    def from_dict(cls, d: dict) -> QuinInvariants:
        return cls(**{k: int(d[k]) for k in ("W1", "W2", "W3", "P", "Q", "R")})


class CertKind(str, Enum):
    LINEAR_ROOT = "LinearRoot"
    QUADRATIC_SPLIT = "QuadraticSplit"
    FAMILY_CASE1 = "FamilyCase1"
    FAMILY_CASE2 = "FamilyCase2"
    CAPELLI_CASE1 = "CapelliCase1"
    CAPELLI_CASE2 = "CapelliCase2"


@dataclass(frozen=True)
class ReducibilityCert:
    """A factorization of some F(n, A, B), checked on construction."""

    kind: CertKind
    target: IntPoly
    factors: tuple[IntPoly, ...]
    witness: tuple = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "kind", CertKind(self.kind))
        prod = IntPoly((1,))
        for f in self.factors:
            prod = prod * f
        if prod != self.target:
            raise ArithmeticError("certificate factors do not reproduce the target")
        if any(f.degree < 1 for f in self.factors) or len(self.factors) < 2:
            raise ArithmeticError("certificate must contain nontrivial factors")

    def to_dict(self) -> dict:
        wit = [list(w.coeffs) if isinstance(w, IntPoly) else w for w in self.witness]
        return {
            "kind": self.kind.value,
            "target": list(self.target.coeffs),
            "factors": [list(f.coeffs) for f in self.factors],
            "witness": wit,
        }

    @classmethod
    def from_dict(cls, d: dict) -> ReducibilityCert:
        kind = CertKind(d["kind"])
        raw = d.get("witness", [])
        if kind in (CertKind.CAPELLI_CASE1, CertKind.CAPELLI_CASE2):
            witness = tuple(IntPoly(tuple(w)) for w in raw)
        else:
            witness = tuple(int(w) for w in raw)
        return cls(
            kind,
            IntPoly(tuple(d["target"])),
            tuple(IntPoly(tuple(f)) for f in d["factors"]),
            witness,
        )


def build(params: QuinParams) -> IntPoly:
    n, A, B = params.n, params.A, params.B
    if n > MAX_BUILD_N:
        raise ValueError(f"n is capped at {MAX_BUILD_N}")
    quarter = 1 << (n - 2)
    c = [0] * (4 * quarter + 1)
    c[0] = c[-1] = 1
    c[quarter] = c[3 * quarter] = A
    c[2 * quarter] = B
    return IntPoly(tuple(c))


def quin(n: int, A: int, B: int) -> IntPoly:
    return build(QuinParams(n, A, B))


def g_quartic(C: int, D: int) -> IntPoly:
    """x^4 + C x^3 + D x^2 - C x + 1."""
    return IntPoly((1, -C, D, C, 1))


def invariants(A: int, B: int) -> QuinInvariants:
    W1 = B + 2 - 2 * A
    W2 = B + 2 + 2 * A
    W3 = A * A - 4 * B + 8
    return QuinInvariants(W1, W2, W3, gcd(W1, W3), gcd(W1, W2), gcd(W2, W3))


def disc_formula(params: QuinParams) -> int:
    n = params.n
    if n > MAX_BUILD_N:
        raise ValueError(f"n is capped at {MAX_BUILD_N}")
    inv = invariants(params.A, params.B)
    return 2 ** ((1 << n) * (n - 2)) * (inv.W1 * inv.W2 * inv.W3**2) ** (1 << (n - 2))


def _norm_ceiling(p: IntPoly) -> int:
    """Integer upper bound for the 2-norm of p."""
    return isqrt(sum(c * c for c in p.coeffs)) + 1


def _mignotte(p: IntPoly, m: int, j: int) -> int:
    # bound on |coefficient of x^j| for any degree-m factor of p
    return comb(m, j) * _norm_ceiling(p)


def quartic_irreducible(A: int, B: int) -> tuple[bool, ReducibilityCert | None]:
    """Decide irreducibility of x^4 + A x^3 + B x^2 + A x + 1 over Q."""
    if A * B == 0:
        raise ValueError("A*B must be nonzero")
    target = quin(2, A, B)
    inv = invariants(A, B)
    for root, w in ((1, inv.W2), (-1, inv.W1)):
        if w == 0:
            lin = IntPoly((-root, 1))
            return False, ReducibilityCert(
                CertKind.LINEAR_ROOT, target, (lin, target.exact_div(lin)), (root,)
            )
    # monic quadratic factors have constants (1, 1) or (-1, -1)
    # (x^2+ux+1)(x^2+vx+1): u+v = A, uv = B-2, so u, v are roots of z^2 - Az + (B-2)
    disc = inv.W3
    if disc >= 0:
        r = isqrt(disc)
        if r * r == disc and (A + r) % 2 == 0:
            u, v = (A + r) // 2, (A - r) // 2
            return False, ReducibilityCert(
                CertKind.QUADRATIC_SPLIT, target, (IntPoly((1, u, 1)), IntPoly((1, v, 1))), (u, v)
            )
    # (x^2+ux-1)(x^2+vx-1) has x^3 coefficient u+v and x coefficient -(u+v): forces A = 0
    if A == 0:
        # unreachable while A*B != 0; kept so the case analysis is total
        raise AssertionError
    return True, None


def _hypothesis_check(A: int, B: int):
    if A % 4 != 1 or B % 4 != 1:
        raise ValueError("requires A = B = 1 (mod 4)")


def family_pair(s: int, t: int) -> tuple[tuple[int, int, int], tuple[int, int, int]]:
    """The two (A, B1), (A, B2) family values for parameters (s, t)."""
    A = 4 * t - 4 * s * s - 4 * s + 1
    B1 = 4 * t * t + 4 * t - 8 * s * s - 8 * s + 1
    B2 = 4 * t * t + 4 * t + 8 * s * s + 8 * s + 5
    return (A, B1, 1), (A, B2, 2)


def family_cert(s: int, t: int, case: int) -> ReducibilityCert:
    (A, B1, _), (_, B2, _) = family_pair(s, t)
    C, D = 2 * s + 1, 2 * t + 1
    if case == 1:
        target = quin(3, A, B1)
        return ReducibilityCert(
            CertKind.FAMILY_CASE1, target, (quin(2, C, D), quin(2, -C, D)), (s, t)
        )
    target = quin(3, A, B2)
    return ReducibilityCert(
        CertKind.FAMILY_CASE2, target, (g_quartic(C, D), g_quartic(-C, D)), (s, t)
    )


def octic_family_membership(A: int, B: int) -> ReducibilityCert | None:
    """Find (s, t) putting F(3, A, B) in the reducible family, or return None.

    Under A = B = 1 (mod 4), None certifies irreducibility of the octic.
    """
    _hypothesis_check(A, B)
    a0 = (A - 1) // 4
    s = 0
    while True:
        m = s * (s + 1)
        t = a0 + m
        c1 = 4 * t * (t + 1) - 8 * m + 1
        c2 = 4 * t * (t + 1) + 8 * m + 5
        if c1 == B:
            return family_cert(s, t, 1)
        if c2 == B:
            return family_cert(s, t, 2)
        # c1, c2 are quadratics in m with positive leading term; both increase
        # once 2m > 1 - 2*a0, so past that point exceeding B is final
        if 2 * m > 1 - 2 * a0 and c1 > B and c2 > B:
            return None
        s += 1


def octic_factor_search(A: int, B: int) -> tuple[IntPoly, ...] | None:
    """Brute-force factor search for F(3, A, B); returns a factorization or None.

    Independent of the family parametrization.  Any proper factorization of
    this even octic yields a linear, quadratic, or quartic-times-quartic
    factorization (an irreducible cubic c forces c(x)c(-x), leaving a
    quadratic cofactor), and each of those is enumerated inside Mignotte's
    coefficient bounds.
    """
    target = quin(3, A, B)
    for r in (1, -1):
        if target(r) == 0:
            lin = IntPoly((-r, 1))
            return lin, target.exact_div(lin)
    bound = _mignotte(target, 2, 1)
    for d in (1, -1):
        for u in range(-bound, bound + 1):
            quad = IntPoly((d, u, 1))
            try:
                cof = target.exact_div(quad)
            except ArithmeticError:
                continue
            return quad, cof
    # u1 = x^4+a1x^3+b1x^2+c1x+d, u2 = x^4+a2x^3+b2x^2+c2x+d (d1 d2 = 1 forces d1 = d2)
    # x^7: a2 = -a1; x^1: c2 = -c1; x^6: b1+b2 = A + a1^2; x^2: d(b1+b2) - c1^2 = A
    bound = _mignotte(target, 4, 1)
    for d in (1, -1):
        for a1 in range(-bound, bound + 1):
            S = A + a1 * a1
            csq = d * S - A
            if csq < 0:
                continue
            r = isqrt(csq)
            if r * r != csq:
                continue
            for c1 in {r, -r}:
                prod = B - 2 * d + 2 * a1 * c1
                disc = S * S - 4 * prod
                if disc < 0:
                    continue
                e = isqrt(disc)
                if e * e != disc or (S + e) % 2:
                    continue
                b1, b2 = (S + e) // 2, (S - e) // 2
                u1 = IntPoly((d, c1, b1, a1, 1))
                u2 = IntPoly((d, -c1, b2, -a1, 1))
                if u1 * u2 == target:
                    return u1, u2
                u2 = IntPoly((d, -c1, b1, -a1, 1))
                u1 = IntPoly((d, c1, b2, a1, 1))
                if u1 * u2 == target:
                    return u1, u2
    return None


def _capelli_case1(A: int, B: int) -> tuple[IntPoly, IntPoly] | None:
    """Solve w = S0^2 - x S1^2 with S0 = x^2+ax+b, S1 = cx+e, w = F(2, A, B).

    Coefficients: x^3: 2a - c^2 = A; x^2: a^2 + 2b - 2ce = B; x: 2ab - e^2 = A; 1: b^2 = 1.
    """
    w = quin(2, A, B)
    # a is the x^2 coefficient of the degree-4 factor S0(x^2) - x S1(x^2) of w(x^2)
    bound = _mignotte(w.compose_power(2), 4, 2)
    found = []
    for b in (1, -1):
        for a in range(-bound, bound + 1):
            csq, esq = 2 * a - A, 2 * a * b - A
            if csq < 0 or esq < 0:
                continue
            c, e = isqrt(csq), isqrt(esq)
            if c * c != csq or e * e != esq:
                continue
            for cc in sorted({c, -c}, reverse=True):
                for ee in sorted({e, -e}, reverse=True):
                    if a * a + 2 * b - 2 * cc * ee == B:
                        found.append((IntPoly((b, a, 1)), IntPoly((ee, cc))))
    if not found:
        return None
    S0, S1 = found[0]
    assert S0 * S0 - IntPoly((0, 1)) * S1 * S1 == w
    return S0, S1


def _int_roots_quadratic(a: int, b: int, c: int) -> list[int]:
    """Integer roots of a u^2 + b u + c (a may be 0)."""
    if a == 0:
        if b == 0:
            return []
        return [-c // b] if c % b == 0 else []
    disc = b * b - 4 * a * c
    if disc < 0:
        return []
    r = isqrt(disc)
    if r * r != disc:
        return []
    return sorted({(-b + sg * r) // (2 * a) for sg in (1, -1) if (-b + sg * r) % (2 * a) == 0})


def _signed_sqrts(n: int) -> list[int]:
    if n < 0:
        return []
    r = isqrt(n)
    return sorted({r, -r}) if r * r == n else []


def _capelli_case2(A: int, B: int) -> tuple[IntPoly, IntPoly] | None:
    """Solve w(x^2) = S0^2 - x S1^2 with deg S0 = 4, deg S1 <= 3.

    Writing S0 = E0(x^2) + x O0(x^2), S1 = E1(x^2) + x O1(x^2) with y = x^2,
    E0 = y^2 + a2 y + a0, O0 = a3 y + a1, E1 = c2 y + c0, O1 = c3 y + c1, the
    odd part gives 2 E0 O0 = E1^2 + y O1^2 and the even part
    E0^2 + y O0^2 - 2 y E1 O1 = w(y).  The constant and top odd equations force
    c0 = 2g, a1 = 2 a0 g^2 and c3 = 2h, a3 = 2 h^2; the rest pins a2, c1, c2.
    """
    w = quin(2, A, B)
    target = w.compose_power(2)
    # a1, a3 are the z^2, z^6 coefficients of a degree-8 factor of w(z^4)
    big = w.compose_power(4)
    amax = max(_mignotte(big, 8, 2), _mignotte(big, 8, 6))
    gmax = isqrt(amax // 2) + 1
    xp = IntPoly((0, 1))
    for a0 in (1, -1):
        for g in range(-gmax, gmax + 1):
            c0, a1 = 2 * g, 2 * a0 * g * g
            for h in range(-gmax, gmax + 1):
                c3, a3 = 2 * h, 2 * h * h
                if g == 0:
                    # 2 a0 a2 + a1^2 - 2 c0 c1 = A with a1 = c0 = 0
                    a2s = [a0 * A // 2] if A % 2 == 0 else []
                elif h == 0:
                    # 2 a2 + a3^2 - 2 c2 c3 = A with a3 = c3 = 0
                    a2s = [A // 2] if A % 2 == 0 else []
                else:
                    K3, K0 = a3 * a3 - A, a1 * a1 - A
                    # substitute c2 = (2u + K3)/(2 c3), c1 = (2 a0 u + K0)/(2 c0) into
                    # 2 a1 + 2 u a3 = c2^2 + 2 c3 c1, multiplied through by 4 c3^2 c0
                    qa = 4 * c0
                    qb = 4 * c0 * K3 + 8 * a0 * c3**3 - 8 * a3 * c3 * c3 * c0
                    qc = c0 * K3 * K3 + 4 * c3**3 * K0 - 8 * a1 * c3 * c3 * c0
                    a2s = _int_roots_quadratic(qa, qb, qc)
                for a2 in a2s:
                    if h != 0:
                        num = 2 * a2 + a3 * a3 - A
                        c2s = [num // (2 * c3)] if num % (2 * c3) == 0 else []
                    else:
                        c2s = _signed_sqrts(2 * a1)
                    if g != 0:
                        num = 2 * a0 * a2 + a1 * a1 - A
                        c1s = [num // (2 * c0)] if num % (2 * c0) == 0 else []
                    else:
                        c1s = _signed_sqrts(2 * a0 * a3)
                    for c1 in c1s:
                        for c2 in c2s:
                            S0 = IntPoly((a0, a1, a2, a3, 1))
                            S1 = IntPoly((c0, c1, c2, c3))
                            if S0 * S0 - xp * S1 * S1 == target:
                                return S0, S1
    return None


def capelli_reducible(A: int, B: int, k: int) -> ReducibilityCert | None:
    """Decide reducibility of w(x^(2^k)) for the irreducible quartic w = F(2, A, B)."""
    if k < 1:
        raise ValueError("k must be at least 1")
    ok, _ = quartic_irreducible(A, B)
    if not ok:
        raise ValueError("w(x) is reducible")
    target = quin(k + 2, A, B)
    sol = _capelli_case1(A, B)
    if sol is not None:
        S0, S1 = sol
        # w(x^2) = (S0(x^2) - x S1(x^2)) (S0(x^2) + x S1(x^2))
        base = S0.compose_power(2)
        odd = IntPoly((0, 1)) * S1.compose_power(2)
        u, v = base - odd, base + odd
        step = 1 << (k - 1)
        return ReducibilityCert(
            CertKind.CAPELLI_CASE1, target, (u.compose_power(step), v.compose_power(step)), (S0, S1)
        )
    if k >= 2:
        sol = _capelli_case2(A, B)
        if sol is not None:
            S0, S1 = sol
            base = S0.compose_power(2)
            odd = IntPoly((0, 1)) * S1.compose_power(2)
            u, v = base - odd, base + odd
            step = 1 << (k - 2)
            return ReducibilityCert(
                CertKind.CAPELLI_CASE2, target, (u.compose_power(step), v.compose_power(step)), (S0, S1)
            )
    return None


def irreducible(params: QuinParams) -> tuple[bool, ReducibilityCert | None]:
    """Exact irreducibility of F(n, A, B) over Q, with a certificate when reducible."""
    n, A, B = params.n, params.A, params.B
    if n > MAX_DECIDE_N:
        raise ValueError(f"irreducibility decisions are capped at n = {MAX_DECIDE_N}")
    ok, cert = quartic_irreducible(A, B)
    if not ok:
        if n == 2:
            return False, cert
        step = 1 << (n - 2)
        factors = tuple(f.compose_power(step) for f in cert.factors)
        return False, ReducibilityCert(cert.kind, build(params), factors, cert.witness)
    if n == 2:
        return True, None
    if n == 3 and params.in_hypothesis():
        cert = octic_family_membership(A, B)
        return cert is None, cert
    cert = capelli_reducible(A, B, n - 2)
    return cert is None, cert
