"""Digit predicates V, U, W on rationals.

U(x, u, k): the canonical expansion of x has digit k in the position of
weight u.  V(x, u, k): some expansion does (canonical, or the twin ending
in (r-1)^omega when x is a nonzero r-adic).  W is V restricted to
[0,1] x r^(-N) x {0..r-1}.  All three return False on out-of-domain
arguments instead of raising.
"""
from __future__ import annotations

from fractions import Fraction

from .expansions import (
    Rational,
    expand,
    is_r_adic,
    other_expansion,
    power_of,
)


def _digit_args(r: int, u: Rational, k: Rational) -> tuple[int, int] | None:
    n = power_of(u, r)
    if n is None:
        return None
    k = Fraction(k)
    if k.denominator != 1 or not 0 <= k.numerator < r:
        return None
    return n, k.numerator


def digit_predicate(kind: str, r: int, x: Rational, u: Rational, k: Rational) -> bool:
    if kind not in ("V", "U", "W"):
        raise ValueError(f"kind must be V, U or W, got {kind!r}")
    args = _digit_args(r, u, k)
    if args is None:
        return False
    n, kd = args
    x = Fraction(x)
    if kind == "W" and not (0 <= x <= 1 and n <= 0):
        return False
    w = expand(x, r)
    if w.digit_at(n) == kd:
        return True
    if kind == "U":
        return False
    tw = other_expansion(w)
    return tw is not None and tw.digit_at(n) == kd


def termination_depth(x: Rational, r: int) -> int | None:
    """Minimal m >= 0 with x * r^m an integer, or None if there is none."""
    if not is_r_adic(x, r):
        return None
    x = Fraction(x)
    m = 0
    while x.denominator != 1:
        x *= r
        m += 1
    return m


def fact11_v_from_u(r: int, x: Rational, u: Rational, k: Rational) -> bool:
    """V(x,u,k) computed from U alone, via the two-expansions case split.

    Evaluates  U(x,u,k)  or else the existence of the deepest nonzero
    canonical position v (all canonical digits strictly below v vanish,
    the digit at v does not), with the twin expansion contributing digit
    k+1's predecessor at v and r-1 strictly below v.  The existential
    over v is effective: only v = r^-m for the termination depth m of x
    can satisfy the side conditions, and the universally quantified
    "all digits below v are zero" is equivalent to x * r^m being an
    integer.
    """
    if digit_predicate("U", r, x, u, k):
        return True
    args = _digit_args(r, u, k)
    if args is None:
        return False
    n, kd = args
    x = Fraction(x)
    if x == 0:
        return False
    m = termination_depth(x, r)
    if m is None:
        return False
    v = Fraction(1, r**m)
    # not U(x, v, 0) holds by minimality of m (digit at v is nonzero),
    # except when m = 0 and the whole integer part is a power boundary;
    # check it explicitly to stay faithful to the formula.
    if digit_predicate("U", r, x, v, 0):
        # digit at v is 0: happens only for integers whose last nonzero
        # digit sits above position 0; walk v upward to that digit.
        while digit_predicate("U", r, x, v, 0):
            v *= r
    u = Fraction(u)
    if u > v:
        return False
    if u == v:
        return kd + 1 < r and digit_predicate("U", r, x, u, kd + 1)
    return kd == r - 1
