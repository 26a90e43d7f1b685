from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cantorarith import digit_predicate, expand, fact11_v_from_u, in_Dr, tau


def test_spec_examples():
    assert digit_predicate("V", 3, F(1, 3), F(1, 3), 0)
    assert digit_predicate("V", 3, F(1, 3), F(1, 3), 1)
    assert not digit_predicate("U", 3, F(1, 3), F(1, 3), 0)
    assert not digit_predicate("W", 3, F(4, 3), F(1, 3), 1)


def test_out_of_domain_is_false():
    assert not digit_predicate("V", 3, F(1, 3), F(1, 6), 0)  # u not a power
    assert not digit_predicate("V", 3, F(1, 3), F(1, 3), F(1, 2))  # k not integral
    assert not digit_predicate("V", 3, F(1, 3), F(1, 3), 3)  # k out of range
    assert not digit_predicate("W", 3, F(1, 3), F(3), 0)  # u > 1 out of W's box


def test_fact11_examples():
    assert fact11_v_from_u(3, F(1, 3), F(1, 3), 0)
    assert fact11_v_from_u(3, F(1, 2), F(1, 3), 1)
    assert not fact11_v_from_u(3, F(1, 2), F(1, 3), 2)


def grid(r, count=1000):
    out = []
    den = 1
    while len(out) < count:
        den += 1
        for num in range(0, den + 1):
            out.append(F(num, den))
            if len(out) >= count:
                break
    return out


@pytest.mark.parametrize("r", [2, 3, 5])
def test_fact11_agrees_with_v_on_grid(r):
    us = [F(1, r**n) for n in range(0, 4)]
    for x in grid(r, 250):
        for u in us:
            for k in range(r):
                assert fact11_v_from_u(r, x, u, k) == digit_predicate("V", r, x, u, k), (
                    x,
                    u,
                    k,
                )


@pytest.mark.parametrize("r", [2, 3, 10])
def test_digit_uniqueness(r):
    for x in grid(r, 120):
        if not 0 <= x < 1:
            continue
        for n in range(1, 5):
            u = F(1, r**n)
            u_digits = [k for k in range(r) if digit_predicate("U", r, x, u, k)]
            assert len(u_digits) == 1
            v_digits = [k for k in range(r) if digit_predicate("V", r, x, u, k)]
            assert 1 <= len(v_digits) <= 2
            if in_Dr(x, r) and x != 0 and F(u) <= tau(x, r).value():
                assert len(v_digits) == 2, (x, u)
            else:
                assert len(v_digits) == 1, (x, u)


def test_zero_has_single_expansion():
    for n in range(1, 6):
        assert digit_predicate("V", 3, F(0), F(1, 3**n), 0)
        assert not digit_predicate("V", 3, F(0), F(1, 3**n), 2)


@settings(max_examples=120, deadline=None)
@given(
    st.builds(F, st.integers(-200, 200), st.integers(1, 200)),
    st.sampled_from([2, 3, 4, 5]),
    st.integers(-3, 3),
)
def test_u_matches_canonical_word(q, r, n):
    w = expand(q, r)
    u = F(r) ** n
    for k in range(r):
        assert digit_predicate("U", r, q, u, k) == (w.digit_at(n) == k)
