import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from recquint.dedekind import (
    MonogenicityVerdict,
    Status,
    candidate_primes,
    dedekind_check,
    factor_integer,
    is_monogenic,
    squarefree,
)
from recquint.ffield import mod_reduce
from recquint.poly import IntPoly
from recquint.quintinomial import QuinParams, build, invariants, quin

PHI5 = IntPoly((1, 1, 1, 1, 1))
X_X1SQ_PHI5 = IntPoly((0, 1)) * IntPoly((1, 1)) ** 2 * PHI5


def _trial_factor(m):
    out = {}
    m = abs(m)
    d = 2
    while d * d <= m:
        while m % d == 0:
            out[d] = out.get(d, 0) + 1
            m //= d
        d += 1
    if m > 1:
        out[m] = out.get(m, 0) + 1
    return sorted(out.items())


def test_factor_examples():
    assert factor_integer(663) == [(3, 1), (13, 1), (17, 1)]
    assert factor_integer(125) == [(5, 3)]
    assert factor_integer(-45) == [(-1, 1), (3, 2), (5, 1)]
    assert factor_integer(1) == []
    with pytest.raises(ValueError):
        factor_integer(0)


@settings(max_examples=300)
@given(st.integers(1, 10**9))
def test_factor_against_trial_division(m):
    assert factor_integer(m) == _trial_factor(m)


def test_factor_large_semiprime():
    p, q = 1_000_000_007, 998_244_353
    assert factor_integer(p * q * 12) == [(2, 2), (3, 1), (q, 1), (p, 1)]
    assert factor_integer((2**61 - 1) ** 2) == [(2**61 - 1, 2)]


def test_budget_exhaustion_returns_none():
    p, q = 4_294_967_311, 4_294_967_357  # two 33-bit primes
    assert factor_integer(p * q, budget=1) is None
    assert squarefree(p * q, budget=1) is None


def test_squarefree_examples():
    assert squarefree(45) is False
    assert squarefree(663) is True
    assert squarefree(1) is True
    assert squarefree(-663) is True
    with pytest.raises(ValueError):
        squarefree(0)


def test_dedekind_examples():
    for A in (5, 9, -3, 401):
        out = dedekind_check(quin(3, A, A), 2)
        assert out.divides_index
        assert mod_reduce(out.F, 2) == mod_reduce(X_X1SQ_PHI5, 2)
    assert not dedekind_check(PHI5, 5).divides_index
    assert dedekind_check(quin(2, 1, 9), 3).divides_index


def test_dedekind_errors():
    with pytest.raises(ValueError):
        dedekind_check(IntPoly((1, 1, 2)), 3)
    with pytest.raises(ValueError):
        dedekind_check(PHI5, 4)


def _random_monic(rng):
    d = rng.choice((4, 8))
    return IntPoly(tuple(rng.randint(-40, 40) for _ in range(d)) + (1,))


def test_lift_independence_and_exactness():
    rng = random.Random(17)
    for _ in range(500):
        T = _random_monic(rng)
        q = rng.choice((2, 3, 5, 7, 11, 13))
        a = dedekind_check(T, q)
        b = dedekind_check(T, q, symmetric_lift=True)
        assert a.divides_index == b.divides_index
        for out in (a, b):
            assert out.h1 * out.h2 - T == IntPoly(tuple(q * c for c in out.F.coeffs))


def test_index_divisor_from_square_root_field():
    # x^2 - 5: Z[sqrt 5] has index 2 in the ring of integers
    assert dedekind_check(IntPoly((-5, 0, 1)), 2).divides_index
    assert not dedekind_check(IntPoly((-3, 0, 1)), 2).divides_index


def test_verdict_examples():
    assert is_monogenic(QuinParams(2, 1, 1)).status is Status.MONOGENIC
    v = is_monogenic(QuinParams(2, 1, 9))
    assert v.status is Status.NOT_MONOGENIC and v.obstruction_primes == (3,)
    v = is_monogenic(QuinParams(3, 5, 5))
    assert v.status is Status.NOT_MONOGENIC and v.obstruction_primes == (2,)
    v = is_monogenic(QuinParams(3, 1, 1))
    assert v.status is Status.REDUCIBLE and v.certificate is not None


def test_candidate_primes():
    assert candidate_primes(QuinParams(2, 1, 1)) == ([5], 1)
    qs, _ = candidate_primes(QuinParams(3, 5, 5))
    assert qs == [2, 3, 13, 17]


def _sf(m):
    return all(e == 1 for _, e in _trial_factor(m))


def test_item2_equivalence_small_grid():
    hyp = [v for v in range(-61, 62) if v % 4 == 1]
    for A in hyp:
        for B in hyp:
            inv = invariants(A, B)
            expect = _sf(inv.W1) and _sf(inv.W2) and _sf(inv.W3)
            assert (is_monogenic(QuinParams(2, A, B)).status is Status.MONOGENIC) == expect, (A, B)


def test_monogenicity_is_inherited_downwards():
    hyp = [v for v in range(-51, 52) if v % 4 == 1]
    for A in hyp:
        for B in hyp:
            if is_monogenic(QuinParams(3, A, B)).status is Status.MONOGENIC:
                assert is_monogenic(QuinParams(2, A, B)).status is Status.MONOGENIC


def test_undecided_when_budget_runs_out():
    # W1 = B + 2 - 2A made a product of two 33-bit primes
    p, q = 4_294_967_311, 4_294_967_357
    A = 3
    B = p * q - 2 + 2 * A
    assert invariants(A, B).W1 == p * q
    v = is_monogenic(QuinParams(2, A, B), budget=1)
    assert v.status is Status.UNDECIDED and "cofactor" in v.reason


def test_verdict_validation_and_roundtrip():
    with pytest.raises(ValueError):
        MonogenicityVerdict(Status.NOT_MONOGENIC)
    for params in (QuinParams(2, 1, 9), QuinParams(3, 5, 5), QuinParams(3, 1, 5), QuinParams(2, 1, 1)):
        v = is_monogenic(params)
        assert MonogenicityVerdict.from_dict(json.loads(json.dumps(v.to_dict()))) == v


def test_exactness_on_family_octics():
    for A in range(-31, 32, 4):
        T = build(QuinParams(3, A, A))
        out = dedekind_check(T, 2)
        assert out.h1 * out.h2 - T == IntPoly(tuple(2 * c for c in out.F.coeffs))
