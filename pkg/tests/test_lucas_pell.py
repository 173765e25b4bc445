import pytest
from hypothesis import given
from hypothesis import strategies as st

from recquint.dedekind import squarefree
from recquint.lucas_pell import (
    P1_TRIPLES,
    CurvePointTable,
    Sign,
    ab_from_pell,
    curve_tables_selfcheck,
    fib,
    lucas,
    negneg_solutions,
    p1_solutions,
    pell_residue_table_check,
    pell_solution,
    pqr_residual,
    pr_squares,
    quartic_rhs,
    verify_lf_identities,
)
from recquint.quintinomial import invariants


def test_sequence_examples():
    assert lucas(0) == 2
    assert lucas(-3) == -4 and isinstance(lucas(-3), int)
    assert fib(7) == 13
    assert [fib(n) for n in range(-4, 5)] == [-3, 2, -1, 1, 0, 1, 1, 2, 3]
    with pytest.raises(OverflowError):
        lucas(10**6)


@given(st.integers(-500, 500))
def test_signed_index_rules(N):
    assert lucas(-N) == (-1) ** (N % 2) * lucas(N)
    assert fib(-N) == (-1) ** ((N + 1) % 2) * fib(N)
    assert lucas(N) == fib(N - 1) + fib(N + 1)


def test_identities():
    assert verify_lf_identities(60)


@pytest.mark.parametrize("n, XY", [(1, (1, 1)), (2, (4, 2)), (4, (29, 13))])
def test_pell_examples(n, XY):
    assert pell_solution(n) == XY


def test_pell_contract():
    for n in range(1, 31):
        X, Y = pell_solution(n)
        assert X * X - 5 * Y * Y == -4


def test_ab_examples():
    assert ab_from_pell(1) == (1, 1)
    assert ab_from_pell(2) is None
    assert ab_from_pell(4) == (29, 61)
    inv = invariants(29, 61)
    assert inv.W2 == 121 == lucas(5) ** 2


def test_ab_gives_w1w2_equal_w3():
    for n in range(1, 101):
        ab = ab_from_pell(n)
        assert (ab is None) == (n % 3 == 2)
        if ab:
            inv = invariants(*ab)
            assert inv.W1 * inv.W2 == inv.W3


def test_residue_table():
    assert pell_residue_table_check(200)


def test_square_identities():
    for n in range(1, 56):
        A_B = ab_from_pell(n)
        if n % 6 == 1:
            A, B = A_B
            assert B + 2 - 2 * A == lucas(n - 2) ** 2
        elif n % 6 == 4:
            A, B = A_B
            assert B + 2 + 2 * A == lucas(n + 1) ** 2
        sq = pr_squares(n)
        if sq is not None:
            assert sq[0] == sq[1] ** 2


def test_only_n1_survives_squarefree():
    for n in range(2, 40):
        ab = ab_from_pell(n)
        if ab is None:
            continue
        inv = invariants(*ab)
        assert not (squarefree(inv.W1) and squarefree(inv.W2)), n


def test_pqr_examples():
    for t in P1_TRIPLES:
        assert pqr_residual(*t, Sign.POS_POS) == 0
    assert pqr_residual(1, 11, 5, "PosPos") == 0
    assert pqr_residual(1, 11, 5, Sign.NEG_NEG) != 0


def test_p1_search_recovers_triples():
    assert sorted(p1_solutions()) == sorted(P1_TRIPLES)


def test_negneg_vacuous():
    assert negneg_solutions(100) == []


def test_curve_tables():
    assert curve_tables_selfcheck()
    assert quartic_rhs(-11) == 1600
    CurvePointTable()
    with pytest.raises(ValueError):
        CurvePointTable(elliptic_points=((2, 3),))
