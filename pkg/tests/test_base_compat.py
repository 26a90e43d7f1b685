from fractions import Fraction as F

import pytest

from cantorarith import (
    DomainError,
    case2_f,
    common_base,
    in_Dr,
    minimal_root,
    support,
    tau,
    theta,
)


def test_common_base_examples():
    assert common_base(4, 8) == (2, 2, 3)
    assert common_base(6, 12) is None
    assert common_base(9, 9) == (3, 2, 2)
    assert common_base(2, 3) is None
    assert common_base(6, 36) == (6, 1, 2)


def test_common_base_symmetry():
    for r in range(2, 30):
        for s in range(2, 30):
            a, b = common_base(r, s), common_base(s, r)
            assert (a is None) == (b is None)
            if a is not None:
                t, e1, e2 = a
                assert b == (t, e2, e1)
                assert t**e1 == r and t**e2 == s


def test_minimal_root():
    assert minimal_root(16) == (2, 4)
    assert minimal_root(36) == (6, 2)
    assert minimal_root(12) == (12, 1)


def test_case2_f_examples():
    assert case2_f(0, 4, 2).exponent == 0
    assert case2_f(1, 4, 2).exponent == -2
    assert case2_f(3, 12, 6).exponent == -5


@pytest.mark.parametrize("r,s", [(4, 2), (12, 6), (8, 2)])
def test_case2_f_matches_ceiling(r, s):
    for d in range(0, 51):
        e = -case2_f(d, r, s).exponent
        # ceiling of log_s(r) * d, by definition of the minimal power
        assert s**e >= r**d
        assert e == 0 or s ** (e - 1) < r**d


def test_case2_f_domain():
    with pytest.raises(DomainError):
        case2_f(1, 6, 10)
    with pytest.raises(DomainError):
        case2_f(1, 6, 6)


def test_theta():
    assert theta(F(1, 4), 2).exponent == -2
    assert theta(F(1, 5), 2).exponent == -3
    assert theta(F(7), 2).exponent == 0


def test_case2_f_is_tau_after_theta_when_leading_exponents_match():
    # with the prime shared between the bases carrying equal exponents,
    # tau_r(s^-e) = r^-e, so tau_r(theta(r^-d)) computes the same ceiling
    r, s = 12, 6
    assert case2_f(0, r, s).exponent == 0
    for d in range(1, 20):
        via_theta = theta(F(1, r**d), s)
        assert tau(F(1, s ** -via_theta.exponent), r).exponent == via_theta.exponent
        assert case2_f(d, r, s).exponent == via_theta.exponent


def test_minimality_of_common_part_power():
    # u^-d is the least element of D_u \ {0} with tau_r = r^-d, r = u * v
    for (r, u) in [(6, 2), (12, 4), (6, 3)]:
        for d in range(1, 7):
            target = F(1, u**d)
            assert tau(target, r).exponent == -d
            for m in range(1, d + 3):
                for num in range(1, u**m):
                    q = F(num, u**m)
                    if q < target and in_Dr(q, u):
                        assert tau(q, r).exponent != -d, (r, u, d, q)


def test_support():
    assert support(12) == {2, 3}
    assert support(7) == {7}
