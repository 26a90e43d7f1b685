"""Multiplicative relations between bases, in exact integer arithmetic."""
from __future__ import annotations

from fractions import Fraction
from math import gcd

from .errors import DomainError
from .expansions import PowerOfBase, Rational
from .omega_order import prime_factors


def support(n: int) -> frozenset[int]:
    return frozenset(prime_factors(n))


def minimal_root(n: int) -> tuple[int, int]:
    """(t, a) with n = t^a and t not a perfect power."""
    fact = prime_factors(n)
    g = 0
    for e in fact.values():
        g = gcd(g, e)
    t = 1
    for p, e in fact.items():
        t *= p ** (e // g)
    return t, g


def common_base(r: int, s: int) -> tuple[int, int, int] | None:
    """Minimal t with r = t^a and s = t^b, when log_r(s) is rational."""
    if r < 2 or s < 2:
        raise DomainError("bases must be >= 2")
    tr, a = minimal_root(r)
    ts, b = minimal_root(s)
    if tr != ts:
        return None
    return tr, a, b


def theta(x: Rational, s: int) -> PowerOfBase:
    """max((0, x] intersected with s^(-N)), for rational x > 0."""
    x = Fraction(x)
    if x <= 0:
        raise DomainError("theta needs x > 0")
    e = 0
    while Fraction(1, s**e) > x:
        e += 1
    return PowerOfBase(s, -e)


def case2_f(d: int, r: int, s: int) -> PowerOfBase:
    """r^(-ceil(log_s(r) * d)) by pure integer power comparison.

    The ceiling is the smallest e with s^e >= r^d; no floating point is
    involved.  Requires the prime support of s to lie inside that of r.
    """
    if not support(s) <= support(r):
        raise DomainError(f"supp({s}) not contained in supp({r})")
    if r == s:
        raise DomainError("bases must differ")
    if d < 0:
        raise DomainError("d must be a natural number")
    target = r**d
    e = 0
    acc = 1
    while acc < target:
        acc *= s
        e += 1
    return PowerOfBase(r, -e)
