"""Galois groups of F(2, A, B) and F(3, A, B) under A = B = 1 (mod 4).

The quartic group is C4 exactly when W1*W2*W3 is a square and D4
otherwise.  ``frobenius_fingerprint`` is an independent check: a prime
where the quartic factors as (1)(1)(2) exhibits a transposition, which C4
does not contain.  The octic group is the wreath product C2^2 wr C2 exactly
when none of W1, W2, W1W2, W1W3, W2W3, W1W2W3 is a square.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import isqrt

from .ffield import factor_pattern, is_prime
from .quintinomial import invariants, octic_family_membership, quin, quartic_irreducible

TRANSPOSITION = ((1, 1), (1, 1), (2, 1))


class GaloisLabel(str, Enum):
    C4 = "C4"
    D4 = "D4"
    WREATH = "WreathC2sqC2"
    NOT_WREATH = "NotWreath"
    OUT_OF_SCOPE = "OutOfScope"


class ReducibleError(ValueError):
    pass


@dataclass(frozen=True)
class GaloisClass:
    label: GaloisLabel
    evidence: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "label", GaloisLabel(self.label))

    def to_dict(self) -> dict:
        return {"label": self.label.value, "evidence": _jsonable(self.evidence)}

    @classmethod
    def from_dict(cls, d: dict) -> GaloisClass:
        return cls(GaloisLabel(d["label"]), _tupled(d["evidence"]))


def _jsonable(x):
    if isinstance(x, (tuple, list)):
        return [_jsonable(v) for v in x]
    return x


def _tupled(x):
    if isinstance(x, list):
        return tuple(_tupled(v) for v in x)
    return x


def is_perfect_square(m: int) -> bool:
    if m < 0:
        return False
    r = isqrt(m)
    return r * r == m


def quartic_galois(A: int, B: int) -> GaloisClass:
    if A % 4 != 1 or B % 4 != 1:
        return GaloisClass(GaloisLabel.OUT_OF_SCOPE, (("reason", "requires A = B = 1 mod 4"),))
    inv = invariants(A, B)
    prod = inv.W1 * inv.W2 * inv.W3
    label = GaloisLabel.C4 if is_perfect_square(prod) else GaloisLabel.D4
    return GaloisClass(label, (("W1W2W3", prod), ("square", label is GaloisLabel.C4)))


def frobenius_fingerprint(A: int, B: int, prime_bound: int = 500, seed: int = 0) -> GaloisClass:
    """Scan factorization patterns of F(2, A, B) mod unramified primes.

    D4 is certified by a (1)(1)(2) pattern.  Otherwise C4 is reported; the
    evidence then lists every pattern seen, which is statistical support only.
    """
    ok, _ = quartic_irreducible(A, B)
    if not ok:
        raise ReducibleError("quartic is reducible")
    inv = invariants(A, B)
    disc = inv.W1 * inv.W2 * inv.W3**2
    f = quin(2, A, B)
    seen = []
    for q in range(2, prime_bound + 1):
        if not is_prime(q) or disc % q == 0:
            continue
        pat = factor_pattern(f, q, seed)
        seen.append((q, pat))
        if pat == TRANSPOSITION:
            return GaloisClass(GaloisLabel.D4, tuple(seen))
    if not seen:
        raise ValueError("no admissible primes below the bound")
    return GaloisClass(GaloisLabel.C4, tuple(seen))


def wreath_quantities(A: int, B: int) -> dict[str, int]:
    inv = invariants(A, B)
    W1, W2, W3 = inv.W1, inv.W2, inv.W3
    return {
        "W1": W1,
        "W2": W2,
        "W1W2": W1 * W2,
        "W1W3": W1 * W3,
        "W2W3": W2 * W3,
        "W1W2W3": W1 * W2 * W3,
    }


def octic_wreath(A: int, B: int) -> GaloisClass:
    if A % 4 != 1 or B % 4 != 1:
        return GaloisClass(GaloisLabel.OUT_OF_SCOPE, (("reason", "requires A = B = 1 mod 4"),))
    cert = octic_family_membership(A, B)
    if cert is not None:
        raise ReducibleError(f"F(3, {A}, {B}) is reducible")
    squares = tuple((name, v, is_perfect_square(v)) for name, v in wreath_quantities(A, B).items())
    wreath = not any(sq for _, _, sq in squares)
    return GaloisClass(GaloisLabel.WREATH if wreath else GaloisLabel.NOT_WREATH, squares)
