"""Dedekind's index criterion and monogenicity verdicts.

A prime q can divide the index [Z_K : Z[theta]] only if q^2 divides the
discriminant.  For F(n, A, B) the discriminant is a power of two times a
power of W1*W2*W3^2, so the candidate primes come from factoring the W's
(never the discriminant itself, which is astronomically large for n >= 4).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from math import gcd, isqrt

from .ffield import ModPoly, factor_mod, gcd_mod, is_prime, mod_reduce, _miller_rabin
from .poly import IntPoly
from .quintinomial import QuinParams, ReducibilityCert, build, invariants, irreducible

DEFAULT_BUDGET = 200_000
TRIAL_LIMIT = 1 << 12

_SMALL_PRIMES = [p for p in range(2, TRIAL_LIMIT) if all(p % d for d in range(2, isqrt(p) + 1))]


def _probable_prime(n: int) -> bool:
    if n < (1 << 64):
        return is_prime(n)
    # strong probable-prime test to 24 fixed bases beyond 64 bits
    return _miller_rabin(n, _SMALL_PRIMES[:24])


def _brent(n: int, rng: random.Random, budget: int) -> tuple[int | None, int]:
    """One nontrivial factor of composite n, and the iterations spent."""
    if n % 2 == 0:
        return 2, 1
    spent = 0
    while spent < budget:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g = r = q = 1
        x = ys = y
        while g == 1 and spent < budget:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += m
            spent += r
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if 1 < g < n:
            return g, spent
    return None, spent


def _factor_partial(m: int, budget: int) -> tuple[dict[int, int], int]:
    """Prime factorization of |m| as far as the budget allows.

    Returns (prime exponents, unfactored cofactor); the cofactor is 1 on success.
    """
    if m == 0:
        raise ValueError("cannot factor zero")
    m = abs(m)
    out: dict[int, int] = {}
    for p in _SMALL_PRIMES:
        if p * p > m:
            break
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            out[p] = e
    if m == 1:
        return out, 1
    rng = random.Random(m)
    stack, left = [m], []
    while stack:
        n = stack.pop()
        if n < TRIAL_LIMIT * TRIAL_LIMIT or _probable_prime(n):
            out[n] = out.get(n, 0) + 1
            continue
        r = isqrt(n)
        if r * r == n:
            stack += [r, r]
            continue
        if budget <= 0:
            left.append(n)
            continue
        d, spent = _brent(n, rng, budget)
        budget -= spent
        if d is None:
            left.append(n)
        else:
            stack += [d, n // d]
    cof = 1
    for n in left:
        cof *= n
    return out, cof


def factor_integer(m: int, budget: int = DEFAULT_BUDGET) -> list[tuple[int, int]] | None:
    """Factor m as a sorted list of (prime, exponent); (-1, 1) leads for m < 0.

    Returns None if Pollard-Brent exhausts ``budget`` iterations.
    """
    primes, cof = _factor_partial(m, budget)
    if cof != 1:
        return None
    out = sorted(primes.items())
    return ([(-1, 1)] + out) if m < 0 else out


def squarefree(m: int, budget: int = DEFAULT_BUDGET) -> bool | None:
    if m == 0:
        raise ValueError("zero is not squarefree-testable")
    primes, cof = _factor_partial(m, budget)
    if any(e > 1 for e in primes.values()):
        return False
    if cof == 1:
        return True
    r = isqrt(cof)
    if r * r == cof or any(cof % p == 0 for p in primes):
        return False
    return None


@dataclass(frozen=True)
class DedekindOutcome:
    q: int
    divides_index: bool
    gcd_witness: ModPoly
    h1: IntPoly
    h2: IntPoly
    F: IntPoly

    def to_dict(self) -> dict:
        return {
            "q": self.q,
            "divides_index": self.divides_index,
            "gcd_witness": list(self.gcd_witness.coeffs),
            "h1": list(self.h1.coeffs),
            "h2": list(self.h2.coeffs),
            "F": list(self.F.coeffs),
        }

    @classmethod
    def from_dict(cls, d: dict) -> DedekindOutcome:
        q = int(d["q"])
        return cls(
            q,
            bool(d["divides_index"]),
            ModPoly(q, d["gcd_witness"]),
            IntPoly(tuple(d["h1"])),
            IntPoly(tuple(d["h2"])),
            IntPoly(tuple(d["F"])),
        )


def dedekind_check(T: IntPoly, q: int, seed: int = 0, symmetric_lift: bool = False) -> DedekindOutcome:
    """Decide whether q divides the index of Z[theta] for theta a root of T.

    T must be monic; irreducibility over Q is the caller's responsibility.
    """
    if not T.is_monic():
        raise ValueError("T must be monic")
    if not is_prime(q):
        raise ValueError(f"{q} is not prime")
    Tbar = mod_reduce(T, q)
    fac = factor_mod(Tbar, seed)
    h1 = IntPoly((1,))
    h1bar = ModPoly(q, (1,))
    for f, _ in fac.factors:
        h1 = h1 * f.lift(symmetric_lift)
        h1bar = h1bar * f
    h2bar = Tbar // h1bar
    h2 = h2bar.lift(symmetric_lift)
    diff = h1 * h2 - T
    if any(c % q for c in diff.coeffs):
        raise AssertionError("h1*h2 - T is not divisible by q")
    F = IntPoly(tuple(c // q for c in diff.coeffs))
    g = gcd_mod(gcd_mod(mod_reduce(F, q), h1bar), h2bar)
    return DedekindOutcome(q, g.degree > 0, g, h1, h2, F)


class Status(str, Enum):
    MONOGENIC = "Monogenic"
    NOT_MONOGENIC = "NotMonogenic"
    REDUCIBLE = "Reducible"
    UNDECIDED = "Undecided"


@dataclass(frozen=True)
class MonogenicityVerdict:
    status: Status
    obstruction_primes: tuple[int, ...] = ()
    outcomes: tuple[DedekindOutcome, ...] = ()
    checked_primes: tuple[int, ...] = ()
    reason: str = ""
    certificate: ReducibilityCert | None = None

    def __post_init__(self):
        object.__setattr__(self, "status", Status(self.status))
        if self.status is Status.NOT_MONOGENIC and not self.obstruction_primes:
            raise ValueError("NotMonogenic requires an obstruction prime")

    def to_dict(self) -> dict:
        return {
            "status": self.status.value,
            "obstruction_primes": list(self.obstruction_primes),
            "checked_primes": list(self.checked_primes),
            "outcomes": [o.to_dict() for o in self.outcomes],
            "reason": self.reason,
            "certificate": self.certificate.to_dict() if self.certificate else None,
        }

    @classmethod
    def from_dict(cls, d: dict) -> MonogenicityVerdict:
        cert = d.get("certificate")
        return cls(
            Status(d["status"]),
            tuple(d["obstruction_primes"]),
            tuple(DedekindOutcome.from_dict(o) for o in d["outcomes"]),
            tuple(d["checked_primes"]),
            d.get("reason", ""),
            ReducibilityCert.from_dict(cert) if cert else None,
        )


def candidate_primes(params: QuinParams, budget: int = DEFAULT_BUDGET) -> tuple[list[int], int]:
    """Primes q with q^2 | disc(F(n, A, B)); returns (primes, unfactored cofactor)."""
    inv = invariants(params.A, params.B)
    vals: dict[int, int] = {}
    cof = 1
    for w, weight in ((inv.W1, 1), (inv.W2, 1), (inv.W3, 2)):
        if w == 0:
            raise ValueError("zero discriminant")
        primes, c = _factor_partial(w, budget)
        cof *= c
        for p, e in primes.items():
            vals[p] = vals.get(p, 0) + weight * e
    if params.n == 2:
        qs = {p for p, e in vals.items() if e >= 2}
        if any(w % 2 == 0 for w in (inv.W1, inv.W2, inv.W3)):
            qs.add(2)
    else:
        # the power of two alone gives 2^2 | disc, and every W-prime appears squared
        qs = set(vals) | {2}
    return sorted(qs), cof


def is_monogenic(params: QuinParams, seed: int = 0, budget: int = DEFAULT_BUDGET) -> MonogenicityVerdict:
    ok, cert = irreducible(params)
    if not ok:
        return MonogenicityVerdict(
            Status.REDUCIBLE, reason=f"reducible ({cert.kind.value})", certificate=cert
        )
    qs, cof = candidate_primes(params, budget)
    if cof != 1:
        return MonogenicityVerdict(
            Status.UNDECIDED, reason=f"factorization budget exhausted; cofactor {cof}"
        )
    T = build(params)
    outcomes = tuple(dedekind_check(T, q, seed) for q in qs)
    bad = tuple(o.q for o in outcomes if o.divides_index)
    if bad:
        return MonogenicityVerdict(
            Status.NOT_MONOGENIC, bad, outcomes, tuple(qs), "index divisible by " + ",".join(map(str, bad))
        )
    return MonogenicityVerdict(Status.MONOGENIC, (), outcomes, tuple(qs), "no prime divides the index")
