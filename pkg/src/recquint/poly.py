"""Dense univariate polynomials over the integers.

Coefficients are stored in ascending order, so ``IntPoly((1, 0, 2))`` is
``1 + 2x^2``.  The zero polynomial is the empty tuple.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence


@dataclass(frozen=True)
class IntPoly:
    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        c = [int(a) for a in self.coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    # construction helpers

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> IntPoly:
        return cls((0,) * degree + (coeff,))

    @classmethod
    def x(cls) -> IntPoly:
        return cls((0, 1))

    @classmethod
    def parse(cls, text: str) -> IntPoly:
        """Parse the comma-separated ascending form, e.g. ``"1,1,1,1,1"``."""
        text = text.strip()
        if not text:
            return cls()
        return cls(tuple(int(tok) for tok in text.split(",")))

    def format(self) -> str:
        return ",".join(str(c) for c in self.coeffs) if self.coeffs else "0"

    # basic properties

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.lc == 1

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __iter__(self):
        return iter(self.coeffs)

    # ring operations

    def __add__(self, other):
        if isinstance(other, int):
            other = IntPoly((other,))
        if not isinstance(other, IntPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] += v
        return IntPoly(tuple(out))

    __radd__ = __add__

    def __neg__(self):
        return IntPoly(tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, int):
            other = IntPoly((other,))
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if not isinstance(other, IntPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, u in enumerate(a):
            if u:
                for j, v in enumerate(b):
                    out[i + j] += u * v
        return IntPoly(tuple(out))

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative exponent")
        result, base = IntPoly((1,)), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c: int) -> IntPoly:
        return IntPoly(tuple(c * a for a in self.coeffs))

    def __call__(self, x0: int) -> int:
        return evaluate(self, x0)

    def derivative(self) -> IntPoly:
        return IntPoly(tuple(i * a for i, a in enumerate(self.coeffs) if i))

    def compose_power(self, k: int) -> IntPoly:
        """Return p(x^k)."""
        if k < 1:
            raise ValueError("k must be positive")
        out = [0] * (k * self.degree + 1) if self.coeffs else []
        for i, a in enumerate(self.coeffs):
            out[k * i] = a
        return IntPoly(tuple(out))

    def reflect(self) -> IntPoly:
        """Return p(-x)."""
        return IntPoly(tuple(-a if i & 1 else a for i, a in enumerate(self.coeffs)))

    def exact_div(self, divisor: IntPoly) -> IntPoly:
        """Exact quotient over Z; raises ArithmeticError if a remainder is left."""
        q, r = divmod_int(self, divisor)
        if not r.is_zero():
            raise ArithmeticError("division is not exact")
        return q

    def __repr__(self):
        return f"IntPoly({self.format()})"

    def __str__(self):
        return to_str(self)


def to_str(p: IntPoly, var: str = "x") -> str:
    if p.is_zero():
        return "0"
    terms = []
    for i in range(p.degree, -1, -1):
        c = p.coeffs[i]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        terms.append((sign, body))
    s = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for sign, body in terms[1:]:
        s += f" {sign} {body}"
    return s


def poly(coeffs: Iterable[int]) -> IntPoly:
    return IntPoly(tuple(coeffs))


def evaluate(p: IntPoly, x0: int) -> int:
    acc = 0
    for a in reversed(p.coeffs):
        acc = acc * x0 + a
    return acc


def divmod_int(a: IntPoly, b: IntPoly) -> tuple[IntPoly, IntPoly]:
    """Division over Z; raises if a leading-coefficient division is inexact."""
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a.coeffs)
    db, lb = b.degree, b.lc
    if len(r) - 1 < db:
        return IntPoly(), a
    q = [0] * (len(r) - db)
    for i in range(len(r) - 1 - db, -1, -1):
        c = r[i + db]
        if c == 0:
            continue
        if c % lb:
            raise ArithmeticError("inexact division over the integers")
        t = c // lb
        q[i] = t
        for j, v in enumerate(b.coeffs):
            r[i + j] -= t * v
    return IntPoly(tuple(q)), IntPoly(tuple(r))


def pseudo_remainder(a: IntPoly, b: IntPoly) -> IntPoly:
    """prem(a, b): remainder of lc(b)^(deg a - deg b + 1) * a divided by b."""
    if b.is_zero():
        raise ZeroDivisionError("pseudo-division by zero")
    r = list(a.coeffs)
    db, lb = b.degree, b.lc
    delta = len(r) - 1 - db
    if delta < 0:
        return a
    steps = delta + 1
    while len(r) - 1 >= db and r:
        c = r[-1]
        shift = len(r) - 1 - db
        r = [lb * v for v in r]
        for j, v in enumerate(b.coeffs):
            r[shift + j] -= c * v
        steps -= 1
        while r and r[-1] == 0:
            r.pop()
    # remaining multiplications skipped because the degree dropped early
    if steps > 0:
        r = [v * lb**steps for v in r]
    return IntPoly(tuple(r))


def content_and_primitive(p: IntPoly) -> tuple[int, IntPoly]:
    """Return (content, primitive part).

    The content is positive; the sign stays on the primitive part, so
    ``-4x`` gives ``(4, -x)``.
    """
    if p.is_zero():
        raise ValueError("zero polynomial has no content")
    c = 0
    for a in p.coeffs:
        c = gcd(c, a)
    return c, IntPoly(tuple(a // c for a in p.coeffs))


def resultant(p: IntPoly, q: IntPoly) -> int:
    """Resultant by the subresultant PRS; agrees with the Sylvester determinant."""
    if p.is_zero() or q.is_zero():
        raise ValueError("resultant of a zero polynomial")
    A, B = p, q
    s = 1
    if A.degree < B.degree:
        A, B = B, A
        if A.degree & 1 and B.degree & 1:
            s = -1
    if B.degree == 0:
        return s * B.lc ** A.degree
    a, A = content_and_primitive(A)
    b, B = content_and_primitive(B)
    t = a**B.degree * b**A.degree
    g = h = 1
    while True:
        delta = A.degree - B.degree
        if A.degree & 1 and B.degree & 1:
            s = -s
        R = pseudo_remainder(A, B)
        A = B
        div = g * h**delta
        B = IntPoly(tuple(c // div for c in R.coeffs))
        g = A.lc
        if delta == 0:
            pass
        elif delta == 1:
            h = g
        else:
            h = g**delta // h ** (delta - 1)
        if B.is_zero():
            return 0
        if B.degree == 0:
            da = A.degree
            h = B.lc**da // h ** (da - 1) if da >= 1 else h
            return s * t * h


def discriminant(p: IntPoly) -> int:
    d = p.degree
    if d < 2:
        raise ValueError("discriminant needs degree >= 2")
    r = resultant(p, p.derivative())
    sign = -1 if (d * (d - 1) // 2) & 1 else 1
    num = sign * r
    if num % p.lc:
        raise ArithmeticError("non-integral discriminant")
    return num // p.lc


def sylvester_matrix(p: IntPoly, q: IntPoly) -> list[list[int]]:
    m, n = p.degree, q.degree
    size = m + n
    rows = []
    pd = list(reversed(p.coeffs))
    qd = list(reversed(q.coeffs))
    for i in range(n):
        rows.append([0] * i + pd + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + qd + [0] * (size - n - 1 - i))
    return rows


def bareiss_det(mat: Sequence[Sequence[int]]) -> int:
    """Fraction-free determinant."""
    M = [list(r) for r in mat]
    n = len(M)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for r in range(k + 1, n):
                if M[r][k]:
                    M[k], M[r] = M[r], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]
