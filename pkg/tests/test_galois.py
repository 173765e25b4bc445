import json

import pytest

from recquint.galois import (
    TRANSPOSITION,
    GaloisClass,
    GaloisLabel,
    ReducibleError,
    frobenius_fingerprint,
    is_perfect_square,
    octic_wreath,
    quartic_galois,
    wreath_quantities,
)
from recquint.quintinomial import invariants

HYP = [v for v in range(-25, 26) if v % 4 == 1]


def test_perfect_squares():
    assert is_perfect_square(25)
    assert not is_perfect_square(-663)
    assert is_perfect_square(121)
    assert is_perfect_square(0)
    assert is_perfect_square(10**40)
    assert not is_perfect_square(10**40 + 1)


def test_quartic_examples():
    g = quartic_galois(1, 1)
    assert g.label is GaloisLabel.C4 and ("W1W2W3", 25) in g.evidence
    g = quartic_galois(5, 5)
    assert g.label is GaloisLabel.D4 and ("W1W2W3", -663) in g.evidence
    g = quartic_galois(1, 9)
    assert g.label is GaloisLabel.D4 and ("W1W2W3", -3159) in g.evidence
    assert quartic_galois(3, 1).label is GaloisLabel.OUT_OF_SCOPE


def test_fingerprint_examples():
    g = frobenius_fingerprint(1, 1, 100)
    assert g.label is GaloisLabel.C4
    assert {pat for _, pat in g.evidence} <= {((1, 1),) * 4, ((4, 1),), ((2, 1), (2, 1))}
    for A, B in ((5, 5), (1, 9)):
        g = frobenius_fingerprint(A, B, 100)
        assert g.label is GaloisLabel.D4 and g.evidence[-1][1] == TRANSPOSITION
    with pytest.raises(ReducibleError):
        frobenius_fingerprint(1, 2)
    with pytest.raises(ValueError):
        frobenius_fingerprint(1, 1, prime_bound=1)


def test_fingerprint_agrees_with_square_criterion():
    for A in HYP:
        for B in HYP:
            exact = quartic_galois(A, B).label
            fp = frobenius_fingerprint(A, B, 500)
            assert fp.label is exact, (A, B)
            if exact is GaloisLabel.C4:
                assert all(pat != TRANSPOSITION for _, pat in fp.evidence)


def test_w1w2_never_square_under_hypothesis():
    hyp = [v for v in range(-101, 102) if v % 4 == 1]
    for A in hyp:
        for B in hyp:
            inv = invariants(A, B)
            assert not is_perfect_square(inv.W1 * inv.W2)


def test_wreath_examples():
    g = octic_wreath(9, 9)
    assert g.label is GaloisLabel.WREATH
    assert wreath_quantities(9, 9)["W1"] == -7
    with pytest.raises(ReducibleError):
        octic_wreath(1, 1)
    assert octic_wreath(3, 1).label is GaloisLabel.OUT_OF_SCOPE


def test_square_w1_gives_not_wreath():
    found = 0
    hyp = [v for v in range(-201, 202) if v % 4 == 1]
    for A in hyp:
        for B in hyp:
            if is_perfect_square(invariants(A, B).W1):
                try:
                    g = octic_wreath(A, B)
                except ReducibleError:
                    continue
                assert g.label is GaloisLabel.NOT_WREATH
                found += 1
    assert found > 0


def test_roundtrip():
    for g in (quartic_galois(5, 5), octic_wreath(9, 9), frobenius_fingerprint(5, 5, 100)):
        assert GaloisClass.from_dict(json.loads(json.dumps(g.to_dict()))) == g
