from fractions import Fraction as F

import pytest

from cantorarith import (
    DomainError,
    PowerOfBase,
    contains,
    derive_params,
    digit_predicate,
    digit_via_Z,
    mu,
    right_endpoints,
)

P3 = derive_params(3, {1})
P4 = derive_params(4, {2})
P5 = derive_params(5, {1, 3})
P41 = derive_params(4, {1})


def pw(r, n):
    return PowerOfBase(r, -n)


def test_mu_examples():
    assert mu(P3, pw(3, 1), F(1, 4)) == 0
    assert mu(P3, pw(3, 2), F(8, 9)) == F(8, 9)
    assert mu(P3, pw(3, 2), F(1)) == F(8, 9)


def test_mu_needs_membership():
    with pytest.raises(DomainError):
        mu(P3, pw(3, 1), F(1, 2))


def test_mu_branching_cases():
    # best endpoint branches off above the deepest matching digit
    assert mu(P4, pw(4, 2), F(1, 3)) == F(3, 16)
    assert mu(P41, pw(4, 2), F(3, 4)) == F(5, 8)
    assert mu(P41, pw(4, 2), F(4, 5)) == F(5, 8)
    assert mu(P41, pw(4, 2), F(1, 5)) == F(3, 16)


def members(P, depth, count):
    out = []
    den = P.r**depth
    for k in range(den + 1):
        q = F(k, den)
        if contains(P, q):
            out.append(q)
        if len(out) >= count:
            break
    return out


def odd_members(P, count):
    out = []
    den = 1
    while len(out) < count:
        den += 1
        for num in range(den + 1):
            q = F(num, den)
            if contains(P, q):
                out.append(q)
            if len(out) >= count:
                break
    return out


@pytest.mark.parametrize("P", [P3, P4, P5])
def test_mu_maximality(P):
    cs = members(P, 4, 40) + odd_members(P, 40)
    for c in cs:
        for n in range(0, 5):
            m = mu(P, pw(P.r, n), c)
            endpoints = right_endpoints(P, n, "cumulative") if n else set()
            assert m == 0 or m in endpoints
            assert m <= c
            assert not any(m < e <= c for e in endpoints)


@pytest.mark.parametrize("P", [P3, P4, P5])
def test_digit_recovery_matches_canonical(P):
    cs = members(P, 5, 120) + odd_members(P, 180)
    for c in cs:
        for n in range(1, 6):
            d = digit_via_Z(P, c, pw(P.r, n))
            assert digit_predicate("U", P.r, c, F(1, P.r**n), d), (c, n, d)


def test_digit_recovery_at_left_endpoints():
    # 1/3 is the left endpoint of the widest gap: its mu window is empty
    # at depth >= 2 and the canonical digits there are 0
    assert digit_via_Z(P3, F(1, 3), pw(3, 1)) == 1
    assert digit_via_Z(P3, F(1, 3), pw(3, 2)) == 0
    assert digit_via_Z(P3, F(1, 3), pw(3, 3)) == 0


def test_digit_via_Z_examples():
    assert digit_via_Z(P3, F(8, 27), pw(3, 2)) == 2
    assert digit_via_Z(P3, F(8, 27), pw(3, 1)) == 0
    for n in range(1, 11):
        assert digit_via_Z(P3, F(0), pw(3, n)) == 0
