import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from recquint.poly import (
    IntPoly,
    bareiss_det,
    content_and_primitive,
    discriminant,
    pseudo_remainder,
    resultant,
    sylvester_matrix,
)
from recquint.quintinomial import quin

BIG = 2**64
coeff = st.integers(-BIG, BIG)
polys = st.lists(coeff, max_size=17).map(lambda c: IntPoly(tuple(c)))
small_polys = st.lists(st.integers(-20, 20), min_size=2, max_size=7).map(lambda c: IntPoly(tuple(c)))


def P(*c):
    return IntPoly(tuple(c))


def test_products():
    assert P(1, 1) * P(-1, 1) == P(-1, 0, 1)
    assert P(1, 0, 1) * P(1, 1, 1) == P(1, 1, 2, 1, 1)
    p = P(3, 0, -2)
    assert p + IntPoly(()) == p


def test_zero_is_empty():
    z = P(0, 0, 0)
    assert z.coeffs == () and z.degree == -1 and z.is_zero()


def test_evaluation():
    phi5 = P(1, 1, 1, 1, 1)
    assert phi5(1) == 5
    assert quin(2, -11, 21)(-1) == 45
    assert quin(2, 1, 1)(1) == 5


def test_parse_format_roundtrip():
    p = IntPoly.parse("-1,4,0,7")
    assert p == P(-1, 4, 0, 7)
    assert IntPoly.parse(p.format()) == p
    assert str(P(-1, 0, 1)) == "x^2 - 1"


@pytest.mark.parametrize(
    "p, q, expected",
    [((-2, 1), (-3, 1), -1), ((-1, 0, 1), (-4, 0, 1), 9)],
)
def test_resultant_examples(p, q, expected):
    assert resultant(P(*p), P(*q)) == expected


def test_resultant_with_itself_vanishes():
    p = P(3, -1, 4, 1)
    assert resultant(p, p) == 0


def test_resultant_rejects_zero():
    with pytest.raises(ValueError):
        resultant(IntPoly(()), P(1, 1))


@pytest.mark.parametrize(
    "p, d",
    [((1, 0, 1), -4), ((1, 1, 1, 1, 1), 125), ((-1, 0, 1), 4)],
)
def test_discriminant_examples(p, d):
    assert discriminant(P(*p)) == d


def test_discriminant_needs_degree_two():
    with pytest.raises(ValueError):
        discriminant(P(1, 1))


@pytest.mark.parametrize(
    "p, content, prim",
    [((2, 4, 6), 2, (1, 2, 3)), ((1, 0, 1), 1, (1, 0, 1)), ((0, -4), 4, (0, -1))],
)
def test_content_and_primitive(p, content, prim):
    assert content_and_primitive(P(*p)) == (content, P(*prim))


@settings(max_examples=60)
@given(polys, polys, polys)
def test_ring_laws(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    assert a - a == IntPoly(())


@settings(max_examples=100)
@given(small_polys, small_polys)
def test_resultant_antisymmetry(p, q):
    if p.is_zero() or q.is_zero():
        return
    sign = -1 if (p.degree * q.degree) % 2 else 1
    assert resultant(p, q) == sign * resultant(q, p)


@settings(max_examples=100)
@given(small_polys, small_polys)
def test_resultant_matches_sylvester(p, q):
    if p.degree < 1 or q.degree < 1:
        return
    assert resultant(p, q) == bareiss_det(sylvester_matrix(p, q))


def test_resultant_with_linear_is_value():
    # res(p, x - a) = (-1)^deg p * p(a)
    rng = random.Random(5)
    for _ in range(50):
        p = IntPoly(tuple(rng.randint(-9, 9) for _ in range(rng.randint(2, 6))) + (rng.randint(1, 9),))
        a = rng.randint(-10, 10)
        sign = -1 if p.degree % 2 else 1
        assert resultant(p, P(-a, 1)) == sign * p(a)


def _rational_gcd_degree(p: IntPoly, q: IntPoly) -> int:
    # primitive PRS: same gcd degree as Euclid over Q
    while not q.is_zero():
        p, q = q, pseudo_remainder(p, q)
        if not q.is_zero():
            q = content_and_primitive(q)[1]
    return p.degree


def test_discriminant_zero_iff_repeated_factor():
    rng = random.Random(11)
    for _ in range(200):
        if rng.random() < 0.4:
            f = P(rng.randint(-5, 5), 1)
            g = P(rng.randint(-5, 5), rng.randint(-3, 3), 1)
            p = f * f * g
        else:
            p = IntPoly(tuple(rng.randint(-6, 6) for _ in range(4)) + (1,))
        repeated = _rational_gcd_degree(p, p.derivative()) > 0
        assert (discriminant(p) == 0) == repeated


def test_compose_and_reflect():
    phi5 = P(1, 1, 1, 1, 1)
    assert phi5.compose_power(2) == quin(3, 1, 1)
    assert quin(2, 3, 7).reflect() == quin(2, -3, 7)
    assert (P(1, 2, 3) * P(4, 5)).exact_div(P(4, 5)) == P(1, 2, 3)
