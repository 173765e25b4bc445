import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from recquint.poly import IntPoly, discriminant
from recquint.quintinomial import (
    CertKind,
    QuinInvariants,
    QuinParams,
    ReducibilityCert,
    build,
    capelli_reducible,
    disc_formula,
    family_cert,
    g_quartic,
    invariants,
    irreducible,
    octic_factor_search,
    octic_family_membership,
    quartic_irreducible,
    quin,
)

PHI5 = IntPoly((1, 1, 1, 1, 1))
PHI10 = IntPoly((1, -1, 1, -1, 1))
nonzero = st.integers(-10**4, 10**4).filter(bool)


def test_build_examples():
    assert build(QuinParams(2, 1, 1)) == PHI5
    assert quin(3, 1, 1) == IntPoly((1, 0, 1, 0, 1, 0, 1, 0, 1)) == PHI5.compose_power(2)
    assert quin(2, -11, 21) == IntPoly((1, -11, 21, -11, 1))


def test_params_validation():
    with pytest.raises(ValueError):
        QuinParams(1, 1, 1)
    with pytest.raises(ValueError):
        QuinParams(2, 0, 3)


def test_invariant_examples():
    assert invariants(1, 1) == QuinInvariants(1, 5, 5, 1, 1, 5)
    assert invariants(-11, 21).W1 == 45
    assert invariants(5, 5) == QuinInvariants(-3, 17, 13, 1, 1, 1)
    inv = invariants(7, -3)
    assert QuinInvariants.from_dict(json.loads(json.dumps(inv.to_dict()))) == inv


def test_disc_formula_examples():
    assert disc_formula(QuinParams(2, 1, 1)) == 125 == discriminant(PHI5)
    assert disc_formula(QuinParams(3, 1, 1)) == 2**8 * 125**2 == 4_000_000
    assert discriminant(quin(3, 1, 1)) == 4_000_000


@settings(max_examples=40, deadline=None)
@given(nonzero, nonzero, st.sampled_from([2, 3, 4]))
def test_disc_formula_matches_subresultant(A, B, n):
    p = QuinParams(n, A, B)
    assert disc_formula(p) == discriminant(build(p))


@settings(max_examples=100)
@given(nonzero, nonzero, st.sampled_from([3, 4, 5]))
def test_build_is_substitution(A, B, n):
    assert quin(n, A, B) == quin(n - 1, A, B).compose_power(2)


@settings(max_examples=100)
@given(nonzero, nonzero)
def test_values_at_plus_minus_one(A, B):
    inv = invariants(A, B)
    assert quin(2, A, B)(1) == inv.W2 and quin(2, A, B)(-1) == inv.W1


def test_quartic_examples():
    assert quartic_irreducible(1, 1) == (True, None)
    ok, cert = quartic_irreducible(1, 2)
    assert not ok and cert.kind is CertKind.QUADRATIC_SPLIT
    assert set(cert.factors) == {IntPoly((1, 0, 1)), IntPoly((1, 1, 1))}
    assert quartic_irreducible(3, 1)[0]
    ok, cert = quartic_irreducible(2, -6)  # W2 = 0: root x = 1
    assert not ok and cert.kind is CertKind.LINEAR_ROOT


def _quartic_factor_brute(A, B):
    """Any monic integer factorization of x^4 + Ax^3 + Bx^2 + Ax + 1, by plain search."""
    f = quin(2, A, B)
    if f(1) == 0 or f(-1) == 0:
        return True
    # quadratic factors x^2 + u x + c with c = +-1; |u| <= 2 + sqrt of the coefficient norm
    bound = 3 + int(sum(c * c for c in f.coeffs) ** 0.5)
    for c in (1, -1):
        for u in range(-bound, bound + 1):
            try:
                f.exact_div(IntPoly((c, u, 1)))
                return True
            except ArithmeticError:
                pass
    return False


def test_quartic_against_brute_search():
    for A in range(-30, 31):
        for B in range(-30, 31):
            if A * B == 0:
                continue
            ok, cert = quartic_irreducible(A, B)
            assert ok == (not _quartic_factor_brute(A, B)), (A, B)


def test_family_examples():
    cert = octic_family_membership(1, 1)
    assert cert.kind is CertKind.FAMILY_CASE1 and cert.witness == (0, 0)
    assert set(cert.factors) == {PHI5, PHI10}
    cert = octic_family_membership(1, 5)
    assert cert.kind is CertKind.FAMILY_CASE2
    assert cert.factors == (g_quartic(1, 1), g_quartic(-1, 1))
    assert cert.factors[0] == IntPoly((1, -1, 1, 1, 1))
    assert octic_family_membership(5, 5) is None
    with pytest.raises(ValueError):
        octic_family_membership(3, 5)


@pytest.mark.parametrize("s", range(-6, 7))
def test_family_products(s):
    for t in range(-6, 7):
        for case in (1, 2):
            cert = family_cert(s, t, case)
            assert cert.factors[0] * cert.factors[1] == cert.target


def test_membership_agrees_with_brute_search():
    hyp = [v for v in range(-21, 22) if v % 4 == 1]
    for A in hyp:
        for B in hyp:
            assert (octic_family_membership(A, B) is None) == (octic_factor_search(A, B) is None), (A, B)


def test_membership_finds_random_members():
    rng = random.Random(2)
    for _ in range(200):
        s, t = rng.randint(-40, 40), rng.randint(-300, 300)
        case = rng.choice((1, 2))
        target = family_cert(s, t, case).target
        A, B = target[2], target[4]
        cert = octic_family_membership(A, B)
        assert cert is not None and cert.target == target


def test_capelli_examples():
    cert = capelli_reducible(1, 1, 1)
    assert cert.kind is CertKind.CAPELLI_CASE1
    assert cert.witness == (IntPoly((1, 1, 1)), IntPoly((1, 1)))
    assert capelli_reducible(5, 5, 1) is None
    for A in (5, 9, -3, -7, 13, 101):
        for k in (1, 2, 3):
            assert capelli_reducible(A, A, k) is None
    with pytest.raises(ValueError):
        capelli_reducible(1, 2, 1)


@pytest.mark.parametrize("A, B", [(-8, 30), (8, -2), (14, 19), (18, -29)])
def test_capelli_second_case(A, B):
    assert capelli_reducible(A, B, 1) is None
    cert = capelli_reducible(A, B, 2)
    assert cert.kind is CertKind.CAPELLI_CASE2
    assert cert.factors[0] * cert.factors[1] == quin(4, A, B)


def test_irreducible_examples():
    ok, cert = irreducible(QuinParams(3, 1, 1))
    assert not ok
    assert irreducible(QuinParams(4, 5, 5)) == (True, None)
    assert irreducible(QuinParams(2, 1, 9)) == (True, None)
    ok, cert = irreducible(QuinParams(4, 1, 2))  # reducible quartic pulled back
    assert not ok and cert.factors[0] * cert.factors[1] == quin(4, 1, 2)
    with pytest.raises(ValueError):
        irreducible(QuinParams(6, 5, 5))


def test_item1_grid():
    hyp = [v for v in range(-101, 102) if v % 4 == 1]
    for A in hyp:
        for B in hyp:
            inv = invariants(A, B)
            assert quartic_irreducible(A, B)[0]
            assert (inv.W1 * inv.W2) % 8 == 5 and inv.W3 % 8 == 5


def test_certificate_checks_product():
    with pytest.raises(ArithmeticError):
        ReducibilityCert(CertKind.QUADRATIC_SPLIT, PHI5, (IntPoly((1, 1)), IntPoly((1, 1))))


def test_certificate_roundtrip():
    for cert in (octic_family_membership(1, 5), capelli_reducible(-8, 30, 2), quartic_irreducible(1, 2)[1]):
        back = ReducibilityCert.from_dict(json.loads(json.dumps(cert.to_dict())))
        assert back == cert


def test_against_sympy():
    sympy = pytest.importorskip("sympy")
    x = sympy.symbols("x")
    rng = random.Random(8)
    for _ in range(150):
        n = rng.choice((3, 4))
        A, B = rng.randint(-30, 30) or 1, rng.randint(-30, 30) or 1
        f = quin(n, A, B)
        expr = sympy.Poly(list(reversed(f.coeffs)), x)
        assert irreducible(QuinParams(n, A, B))[0] == expr.is_irreducible, (n, A, B)
