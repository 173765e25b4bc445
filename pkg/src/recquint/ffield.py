"""Polynomials over prime fields F_q and their complete factorization.

The pipeline is the usual one: squarefree decomposition, distinct-degree
factorization, then equal-degree splitting (Cantor-Zassenhaus for odd q,
the trace map for q = 2).  Randomness comes from a ``random.Random``
seeded per call, so results are reproducible.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache

from .poly import IntPoly

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
MAX_MODULUS = 1 << 64


@lru_cache(maxsize=4096)
def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for n < 2^64 (larger n is rejected)."""
    if n >= MAX_MODULUS:
        raise ValueError("primality test limited to 64-bit inputs")
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    return _miller_rabin(n, _MR_BASES)


def _miller_rabin(n: int, bases) -> bool:
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in bases:
        x = pow(a % n, d, n)
        if x in (0, 1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


# list-level arithmetic; lists are ascending and trimmed

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _add(a, b, q):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, v in enumerate(b):
        out[i] = (out[i] + v) % q
    return _trim(out)


def _sub(a, b, q):
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, v in enumerate(b):
        out[i] = (out[i] - v) % q
    return _trim(out)


def _mul(a, b, q):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, u in enumerate(a):
        if u:
            for j, v in enumerate(b):
                out[i + j] += u * v
    return _trim([c % q for c in out])


def _divmod(a, b, q):
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    r = list(a)
    db = len(b) - 1
    if len(r) - 1 < db:
        return [], r
    inv = pow(b[-1], -1, q)
    quo = [0] * (len(r) - db)
    for i in range(len(r) - 1 - db, -1, -1):
        c = r[i + db] % q
        if c:
            t = c * inv % q
            quo[i] = t
            for j, v in enumerate(b):
                r[i + j] = (r[i + j] - t * v) % q
    return _trim(quo), _trim([c % q for c in r[:db]])


def _rem(a, b, q):
    return _divmod(a, b, q)[1]


def _monic(a, q):
    if not a:
        return 0, []
    lc = a[-1]
    if lc == 1:
        return 1, list(a)
    inv = pow(lc, -1, q)
    return lc, [c * inv % q for c in a]


def _gcd(a, b, q):
    a, b = list(a), list(b)
    while b:
        a, b = b, _rem(a, b, q)
    return _monic(a, q)[1]


def _deriv(a, q):
    return _trim([i * c % q for i, c in enumerate(a)][1:])


def _powmod(base, e, f, q):
    result = [1]
    base = _rem(base, f, q)
    while e:
        if e & 1:
            result = _rem(_mul(result, base, q), f, q)
        e >>= 1
        if e:
            base = _rem(_mul(base, base, q), f, q)
    return result


def _key(f):
    return (len(f), tuple(f))


@dataclass(frozen=True)
class ModPoly:
    """Polynomial over F_q with ascending residues in [0, q)."""

    modulus: int
    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        q = int(self.modulus)
        if not is_prime(q):
            raise ValueError(f"modulus {q} is not prime")
        object.__setattr__(self, "modulus", q)
        object.__setattr__(self, "coeffs", tuple(_trim([int(c) % q for c in self.coeffs])))

    @classmethod
    def _raw(cls, q: int, coeffs) -> ModPoly:
        # skips the primality check for internal constructions
        obj = object.__new__(cls)
        object.__setattr__(obj, "modulus", q)
        object.__setattr__(obj, "coeffs", tuple(coeffs))
        return obj

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def _check(self, other: ModPoly):
        if other.modulus != self.modulus:
            raise ValueError("modulus mismatch")

    def __add__(self, other: ModPoly) -> ModPoly:
        self._check(other)
        return ModPoly._raw(self.modulus, _add(self.coeffs, other.coeffs, self.modulus))

    def __sub__(self, other: ModPoly) -> ModPoly:
        self._check(other)
        return ModPoly._raw(self.modulus, _sub(self.coeffs, other.coeffs, self.modulus))

    def __mul__(self, other: ModPoly) -> ModPoly:
        self._check(other)
        return ModPoly._raw(self.modulus, _mul(self.coeffs, other.coeffs, self.modulus))

    def __pow__(self, k: int) -> ModPoly:
        out = [1]
        for _ in range(k):
            out = _mul(out, self.coeffs, self.modulus)
        return ModPoly._raw(self.modulus, out)

    def __divmod__(self, other: ModPoly):
        self._check(other)
        a, b = _divmod(self.coeffs, other.coeffs, self.modulus)
        return ModPoly._raw(self.modulus, a), ModPoly._raw(self.modulus, b)

    def __floordiv__(self, other: ModPoly) -> ModPoly:
        return divmod(self, other)[0]

    def __mod__(self, other: ModPoly) -> ModPoly:
        return divmod(self, other)[1]

    def monic(self) -> ModPoly:
        return ModPoly._raw(self.modulus, _monic(self.coeffs, self.modulus)[1])

    def lift(self, symmetric: bool = False) -> IntPoly:
        """Integer lift: residues in [0, q), or in (-q/2, q/2] if ``symmetric``."""
        q = self.modulus
        if symmetric:
            return IntPoly(tuple(c - q if c > q // 2 else c for c in self.coeffs))
        return IntPoly(self.coeffs)

    def __repr__(self):
        return f"ModPoly({self.modulus}, {list(self.coeffs)})"


@dataclass(frozen=True)
class ModFactorization:
    unit: int
    factors: tuple[tuple[ModPoly, int], ...]

    def expand(self) -> ModPoly:
        if not self.factors:
            raise ValueError("empty factorization has no modulus")
        q = self.factors[0][0].modulus
        acc = [self.unit % q]
        for f, e in self.factors:
            for _ in range(e):
                acc = _mul(acc, f.coeffs, q)
        return ModPoly._raw(q, acc)

    def pattern(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted((f.degree, e) for f, e in self.factors))


def mod_reduce(p: IntPoly, q: int) -> ModPoly:
    return ModPoly(q, p.coeffs)


def gcd_mod(p: ModPoly, r: ModPoly) -> ModPoly:
    """Monic gcd; the zero polynomial if both inputs are zero."""
    p._check(r)
    return ModPoly._raw(p.modulus, _gcd(p.coeffs, r.coeffs, p.modulus))


def _sqf_list(f, q):
    """Squarefree decomposition of a monic f: list of (squarefree part, multiplicity)."""
    out = []
    mult = 1
    while True:
        df = _deriv(f, q)
        if df:
            g = _gcd(f, df, q)
            h = _divmod(f, g, q)[0]
            i = 1
            while len(h) > 1:
                G = _gcd(g, h, q)
                H = _divmod(h, G, q)[0]
                if len(H) > 1:
                    out.append((H, i * mult))
                g = _divmod(g, G, q)[0]
                h = G
                i += 1
            f = g
        if len(f) <= 1:
            return out
        # f is now a q-th power
        f = [f[i * q] for i in range((len(f) - 1) // q + 1)]
        mult *= q


def _ddf(f, q):
    out = []
    h = [0, 1]
    i = 1
    while 2 * i <= len(f) - 1:
        h = _powmod(h, q, f, q)
        g = _gcd(f, _sub(h, [0, 1], q), q)
        if len(g) > 1:
            out.append((g, i))
            f = _divmod(f, g, q)[0]
            h = _rem(h, f, q)
        i += 1
    if len(f) > 1:
        out.append((f, len(f) - 1))
    return out


def _edf(f, d, q, rng):
    n = len(f) - 1
    if n == d:
        return [f]
    while True:
        a = _trim([rng.randrange(q) for _ in range(n)])
        if len(a) < 2:
            continue
        if q == 2:
            t, b = list(a), list(a)
            for _ in range(d - 1):
                t = _rem(_mul(t, t, q), f, q)
                b = _add(b, t, q)
        else:
            b = _sub(_powmod(a, (q**d - 1) // 2, f, q), [1], q)
        g = _gcd(f, b, q)
        if 1 < len(g) < len(f):
            break
    return _edf(g, d, q, rng) + _edf(_divmod(f, g, q)[0], d, q, rng)


def factor_mod(p: ModPoly, seed: int = 0) -> ModFactorization:
    """Complete factorization into monic irreducibles over F_q."""
    if p.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    q = p.modulus
    unit, f = _monic(p.coeffs, q)
    rng = random.Random(seed)
    factors = []
    for part, e in _sqf_list(f, q):
        for g, d in _ddf(part, q):
            for h in _edf(g, d, q, rng):
                factors.append((h, e))
    factors.sort(key=lambda fe: (_key(fe[0]), fe[1]))
    return ModFactorization(unit, tuple((ModPoly._raw(q, tuple(h)), e) for h, e in factors))


def factor_pattern(p: IntPoly, q: int, seed: int = 0) -> tuple[tuple[int, int], ...]:
    """Sorted multiset of (degree, multiplicity) of the irreducible factors mod q."""
    if p.lc % q == 0:
        raise ValueError(f"leading coefficient vanishes mod {q}")
    return factor_mod(mod_reduce(p, q), seed).pattern()


def linear_factor_count(p: IntPoly, q: int, seed: int = 0) -> int:
    """Number of linear factors of p mod q counted with multiplicity."""
    m = mod_reduce(p, q)
    if m.is_zero():
        raise ValueError("polynomial vanishes identically mod q")
    if m.degree < 1:
        return 0
    return sum(e for f, e in factor_mod(m, seed).factors if f.degree == 1)
