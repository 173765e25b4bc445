"""Lucas and Fibonacci numbers, the Pell equation X^2 - 5Y^2 = -4, and the
coefficient pairs (A, B) it produces when W1*W2 = W3.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import gcd, isqrt

MAX_INDEX = 10_000

# integral points with y >= 0 on y^2 = R^3 - 2R^2 + 65R; completeness is taken on trust
ELLIPTIC_POINTS = ((0, 0), (1, 8), (5, 20), (13, 52), (16, 68), (45, 300), (65, 520), (1573, 62348))
# integral A on y^2 = (A+9)(A+1)(A^2+6A+25); completeness is taken on trust
QUARTIC_A_VALUES = (-1, 0, -9, -11, 4)
P1_TRIPLES = ((1, 11, 5), (1, 3, 13), (1, 1, 5))


def _pos_sequence(n: int, a: int, b: int) -> int:
    for _ in range(n):
        a, b = b, a + b
    return a


def _guard(N: int):
    if abs(N) > MAX_INDEX:
        raise OverflowError(f"|N| is limited to {MAX_INDEX}")


def lucas(N: int) -> int:
    _guard(N)
    if N < 0:
        return -lucas(-N) if N & 1 else lucas(-N)
    return _pos_sequence(N, 2, 1)


def fib(N: int) -> int:
    _guard(N)
    if N < 0:
        return fib(-N) if N & 1 else -fib(-N)
    return _pos_sequence(N, 0, 1)


def _backward(N: int, x0: int, x1: int) -> int:
    """Value at index -N by running x_{k-1} = x_{k+1} - x_k from (x_0, x_1)."""
    lo, hi = x0, x1
    for _ in range(N):
        lo, hi = hi - lo, lo
    return lo


def verify_lf_identities(Nmax: int) -> bool:
    """Check 5F_N = 2L_{N+1} - L_N and L_{2N} + 2(-1)^N = L_N^2 for |N| <= Nmax.

    The sign rule for negative indices is also checked against the
    recurrence run backwards.
    """
    if Nmax < 1:
        raise ValueError("Nmax must be positive")
    for N in range(-Nmax, Nmax + 1):
        if 5 * fib(N) != 2 * lucas(N + 1) - lucas(N):
            return False
        if lucas(2 * N) + (-2 if N & 1 else 2) != lucas(N) ** 2:
            return False
    for N in range(Nmax + 1):
        if _backward(N, 2, 1) != lucas(-N) or _backward(N, 0, 1) != fib(-N):
            return False
    return True


def pell_solution(n: int) -> tuple[int, int]:
    if n < 1:
        raise ValueError("n must be positive")
    X, Y = lucas(2 * n - 1), fib(2 * n - 1)
    assert X * X - 5 * Y * Y == -4
    return X, Y


def ab_from_pell(n: int) -> tuple[int, int] | None:
    X, Y = pell_solution(n)
    if n % 3 == 2:
        return None
    A = -X if n % 3 == 0 else X
    B = 5 * Y - 4
    assert A % 4 == 1 and B % 4 == 1
    assert (B + 4) % 5 == 0 and A * A - 5 * ((B + 4) // 5) ** 2 == -4
    return A, B


def pell_residue_table_check(nmax: int = 200) -> bool:
    """Re-check the residues mod 4 of L_{2n-1} and F_{2n-1} against n mod 3."""
    for n in range(1, nmax + 1):
        L, F = lucas(2 * n - 1) % 4, fib(2 * n - 1) % 4
        if (L == 1) != (n % 3 == 1) or (L == 3) != (n % 3 == 0):
            return False
        if (F == 1) != (n % 3 in (0, 1)) or F == 3:
            return False
    return True


def pr_squares(n: int) -> tuple[int, int] | None:
    """(W value, square root) of the square identity for n = 1 or 4 (mod 6)."""
    ab = ab_from_pell(n)
    if ab is None:
        return None
    A, B = ab
    if n % 6 == 1:
        return B + 2 - 2 * A, lucas(n - 2)
    if n % 6 == 4:
        return B + 2 + 2 * A, lucas(n + 1)
    return None


class Sign(str, Enum):
    POS_POS = "PosPos"
    NEG_NEG = "NegNeg"


def pqr_residual(P: int, Q: int, R: int, case: Sign | str) -> int:
    case = Sign(case)
    base = P * P * Q * Q - 2 * P * Q * Q * R + Q * Q * R * R + 256
    if case is Sign.POS_POS:
        return base - 32 * P * Q - 32 * Q * R - 16 * P * R
    return base + 32 * P * Q - 16 * P * R + 32 * Q * R


def _squarefree_small(n: int) -> bool:
    return all(n % (d * d) for d in range(2, isqrt(n) + 1))


def negneg_solutions(limit: int = 100) -> list[tuple[int, int, int]]:
    """Pairwise-coprime odd squarefree (P, Q, R) <= limit with NegNeg residual zero."""
    cands = [v for v in range(1, limit + 1, 2) if _squarefree_small(v)]
    out = []
    for P in cands:
        for Q in cands:
            if gcd(P, Q) != 1:
                continue
            for R in cands:
                if gcd(P, R) == 1 and gcd(Q, R) == 1 and pqr_residual(P, Q, R, Sign.NEG_NEG) == 0:
                    out.append((P, Q, R))
    return out


def p1_solutions(Rs=(5, 13, 65), qmax: int = 200) -> list[tuple[int, int, int]]:
    return [(1, Q, R) for R in Rs for Q in range(1, qmax + 1) if pqr_residual(1, Q, R, Sign.POS_POS) == 0]


@dataclass(frozen=True)
class CurvePointTable:
    elliptic_points: tuple[tuple[int, int], ...] = ELLIPTIC_POINTS
    quartic_A_values: tuple[int, ...] = QUARTIC_A_VALUES

    def __post_init__(self):
        if not curve_tables_selfcheck(self):
            raise ValueError("embedded curve points fail their equations")


def quartic_rhs(A: int) -> int:
    return (A + 9) * (A + 1) * (A * A + 6 * A + 25)


def curve_tables_selfcheck(table: CurvePointTable | None = None) -> bool:
    pts = table.elliptic_points if table else ELLIPTIC_POINTS
    avals = table.quartic_A_values if table else QUARTIC_A_VALUES
    for R, y in pts:
        if y * y != R**3 - 2 * R * R + 65 * R:
            return False
    for A in avals:
        v = quartic_rhs(A)
        if v < 0 or isqrt(v) ** 2 != v:
            return False
    return True
