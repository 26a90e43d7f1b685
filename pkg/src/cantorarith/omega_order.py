"""Rationals with finite base-r expansions and their omega-order.

D_r is the set of x in [0,1) whose base-r expansion terminates.  tau(x)
is the deepest power of r carrying a nonzero digit; ordering first by
coarser tau and then by value gives (D_r, prec) order type omega.
"""
from __future__ import annotations

from fractions import Fraction

from .errors import DomainError
from .expansions import PowerOfBase, Rational, is_r_adic


def prime_factors(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def in_Dr(q: Rational, r: int) -> bool:
    q = Fraction(q)
    by_support = 0 <= q < 1 and is_r_adic(q, r)
    # finite-expansion characterization, cross-checked
    if 0 <= q < 1:
        d, x = 0, q
        while x.denominator != 1 and d <= 64:
            x *= r
            d += 1
        by_expansion = x.denominator == 1 if d <= 64 else False
        if d <= 64:
            assert by_expansion == by_support
    else:
        by_expansion = False
    return by_support


def _valuation(n: int, p: int) -> int:
    v = 0
    while n % p == 0 and n != 0:
        n //= p
        v += 1
    return v


def tau(q: Rational, r: int) -> PowerOfBase:
    """Least power of r with a nonzero digit in q's finite expansion.

    tau(0) is r^0 by convention, making 0 the unique prec-minimum.
    Computed as the minimal d with q * r^d integral and cross-checked
    against the prime-exponent formula  e = min_i floor(d_i / alpha_i).
    """
    q = Fraction(q)
    if not in_Dr(q, r):
        raise DomainError(f"{q} is not in D_{r}")
    if q == 0:
        return PowerOfBase(r, 0)
    d = 0
    x = q
    while x.denominator != 1:
        x *= r
        d += 1
    e = min(
        (_valuation(q.numerator, p) - _valuation(q.denominator, p)) // a
        for p, a in prime_factors(r).items()
    )
    assert e == -d, f"tau mismatch for {q} base {r}: {-d} vs {e}"
    return PowerOfBase(r, -d)


def prec(d: Rational, e: Rational, r: int) -> bool:
    td, te = tau(d, r), tau(e, r)
    if td.exponent != te.exponent:
        return td.exponent > te.exponent
    return Fraction(d) < Fraction(e)


def iter_Dr(r: int):
    """Yield the elements of D_r in prec-increasing order."""
    yield Fraction(0)
    d = 1
    while True:
        scale = r**d
        for k in range(1, scale):
            if k % r != 0:
                yield Fraction(k, scale)
        d += 1


def enumerate_Dr(r: int, count: int) -> list[Fraction]:
    if count < 1:
        raise DomainError("count must be >= 1")
    out = []
    for q in iter_Dr(r):
        out.append(q)
        if len(out) == count:
            return out
    raise AssertionError("unreachable")


def omega_min_interval(a: Rational, b: Rational, r: int) -> Fraction:
    """The prec-least element of (a, b) intersected with D_r."""
    a, b = Fraction(a), Fraction(b)
    if not (0 <= a < b <= 1):
        raise DomainError(f"need 0 <= a < b <= 1, got ({a}, {b})")
    d = 1
    while True:
        scale = r**d
        k = a.numerator * scale // a.denominator + 1
        while k % r == 0 or Fraction(k, scale) <= a:
            k += 1
        if Fraction(k, scale) < b:
            return Fraction(k, scale)
        d += 1
