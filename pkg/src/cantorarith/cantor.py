"""Generalized Cantor sets C_{r,K} in exact rational arithmetic.

C_{r,K} is the set of x in [0,1] admitting a base-r fractional expansion
that avoids every digit in K, where K is a nonempty subset of {1..r-2}.
Besides membership, this module computes the right endpoints of the
complementary intervals, their lengths, the best left-approximation mu,
and digit recovery from mu differences.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .expansions import PowerOfBase, Rational, expand, other_expansion, power_of


@dataclass(frozen=True)
class CantorParams:
    """Base r, forbidden digits K, and the run decomposition of K.

    runs is the list of maximal intervals [k_i, m_i) covering K, with
    m_i the first allowed digit after each run.  v is the largest gap
    width m_i - k_i and j the 1-based index of the first run attaining
    it; the endpoints m_j r^-n are exactly the ones no earlier endpoint
    can match in interval length.
    """

    r: int
    K: frozenset[int]
    runs: tuple[tuple[int, int], ...]
    M: frozenset[int]
    v: int
    j: int

    def allowed(self) -> list[int]:
        return [d for d in range(self.r) if d not in self.K]

    def M_j(self) -> int:
        return self.runs[self.j - 1][1]

    def __str__(self) -> str:
        ks = ",".join(str(k) for k in sorted(self.K))
        return f"C[{self.r},{{{ks}}}]"


def derive_params(r: int, K) -> CantorParams:
    K = frozenset(int(k) for k in K)
    if r < 3:
        raise DomainError(f"base must be >= 3, got {r}")
    if not K:
        raise DomainError("K must be nonempty")
    if not K <= set(range(1, r - 1)):
        raise DomainError(f"K must avoid 0 and {r - 1}: {sorted(K)}")
    runs = []
    d = 1
    while d < r - 1:
        if d in K:
            k_i = d
            while d in K:
                d += 1
            runs.append((k_i, d))
        else:
            d += 1
    M = frozenset(m for _, m in runs)
    gaps = [m - k for k, m in runs]
    v = max(gaps)
    j = gaps.index(v) + 1
    return CantorParams(r, K, tuple(runs), M, v, j)


def parse_params(text: str) -> CantorParams:
    text = text.strip()
    if not (text.startswith("C[") and text.endswith("]")):
        raise DomainError(f"cannot parse Cantor set from {text!r}")
    body = text[2:-1]
    r_s, _, k_s = body.partition(",")
    k_s = k_s.strip()
    if not (k_s.startswith("{") and k_s.endswith("}")):
        raise DomainError(f"cannot parse digit set from {k_s!r}")
    ks = [p for p in k_s[1:-1].split(",") if p.strip()]
    return derive_params(int(r_s), [int(p) for p in ks])


@dataclass(frozen=True)
class CompInterval:
    left: Fraction
    right: Fraction
    depth: int

    def length(self) -> Fraction:
        return self.right - self.left


def _frac_streams(x: Rational, r: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """All fractional digit streams of x in [0,1], as (preperiod, period)."""
    x = Fraction(x)
    if not 0 <= x <= 1:
        return []
    if x == 1:
        return [((), (r - 1,))]
    w = expand(x, r)
    streams = [(w.frac_preperiod, w.frac_period)]
    tw = other_expansion(w)
    if tw is not None and tw.integer_value() == 0:
        streams.append((tw.frac_preperiod, tw.frac_period))
    return streams


def _stream_digit(stream, i: int) -> int:
    pre, per = stream
    if i <= len(pre):
        return pre[i - 1]
    return per[(i - len(pre) - 1) % len(per)]


def contains(P: CantorParams, x: Rational) -> bool:
    for pre, per in _frac_streams(x, P.r):
        if not (set(pre) | set(per)) & P.K:
            return True
    return False


def avoiding_streams(P: CantorParams, x: Rational):
    return [s for s in _frac_streams(x, P.r) if not (set(s[0]) | set(s[1])) & P.K]


def right_endpoints(P: CantorParams, n: int, mode: str = "cumulative") -> set[Fraction]:
    """Right endpoints of complementary intervals.

    exact_depth(n): endpoints whose last digit sits at depth exactly n
    (gap length in [r^-n, r^-n+1)).  cumulative(n): all endpoints of
    gaps with length at least r^-n, i.e. the union over depths <= n.
    """
    if n < 1:
        raise DomainError("depth must be >= 1")
    if mode not in ("exact_depth", "cumulative"):
        raise DomainError(f"unknown mode {mode!r}")
    depths = range(1, n + 1) if mode == "cumulative" else (n,)
    r = P.r
    allowed = P.allowed()
    out: set[Fraction] = set()
    for depth in depths:
        for prefix in itertools.product(allowed, repeat=depth - 1):
            for m in sorted(P.M):
                digits = prefix + (m,)
                val = Fraction(0)
                for i, b in enumerate(digits, start=1):
                    val += Fraction(b, r**i)
                out.add(val)
    return out


def _terminating_digits(d: Rational, r: int) -> tuple[int, ...] | None:
    d = Fraction(d)
    if not 0 < d <= 1:
        return None
    w = expand(d, r)
    if w.integer_value() != 0 or not w.is_terminating():
        return None
    return w.frac_preperiod


def interval_at(P: CantorParams, d: Rational) -> CompInterval:
    """The complementary interval whose right endpoint is d."""
    digits = _terminating_digits(d, P.r)
    if digits:
        n = len(digits)
        last = digits[-1]
        if last in P.M and not set(digits[:-1]) & P.K:
            for k_i, m_i in P.runs:
                if m_i == last:
                    length = Fraction(m_i - k_i, P.r**n)
                    return CompInterval(Fraction(d) - length, Fraction(d), n)
    raise DomainError(f"{d} is not a right endpoint of {P}")


def is_length(P: CantorParams, z: Rational) -> bool:
    z = Fraction(z)
    for k_i, m_i in P.runs:
        n = power_of(z / (m_i - k_i), P.r)
        if n is not None and n <= -1:
            return True
    return False


def dprime(P: CantorParams, n_max: int) -> set[Fraction]:
    """Endpoints preceded by no smaller endpoint of at-least-equal length.

    Evaluated literally over all endpoints of depth <= n_max (deeper
    endpoints are strictly shorter than any endpoint of depth <= n_max,
    so the truncation is exact); equals {m_j * r^-n : 1 <= n <= n_max}.
    """
    if n_max < 1:
        raise DomainError("depth must be >= 1")
    pts = sorted(right_endpoints(P, n_max, "cumulative"))
    out: set[Fraction] = set()
    best = Fraction(0)
    for d in pts:
        length = interval_at(P, d).length()
        if length > best:
            out.add(d)
            best = length
    return out


def _mu_brute(P: CantorParams, n: int, c: Fraction) -> Fraction:
    if n == 0:
        return Fraction(0)
    cands = [d for d in right_endpoints(P, n, "cumulative") if d <= c]
    return max(cands) if cands else Fraction(0)


def _mu_closed(P: CantorParams, n: int, stream, c: Fraction) -> Fraction:
    """Closed form from the digits b_1 b_2 ... of a K-avoiding expansion.

    Candidates: (A_p) keep the prefix below p and drop the digit at p to
    the largest allowed run-endpoint not exceeding it; (B_j) lower the
    digit at j to the largest allowed digit strictly below it, fill with
    r-1 and close with max(M) at depth n.  The best candidate is mu; the
    prefix-only form matches the A_n candidate whenever M cuts below
    b_n, and the B candidates cover endpoints that branch off earlier.
    """
    r = P.r
    b = [_stream_digit(stream, i) for i in range(1, n + 1)]
    msorted = sorted(P.M)
    allowed = P.allowed()
    best: Fraction | None = None
    prefix = Fraction(0)
    mmax = msorted[-1] if msorted else None
    for p in range(1, n + 1):
        reach = [m for m in msorted if m <= b[p - 1]]
        if reach:
            cand = prefix + Fraction(reach[-1], r**p)
            if best is None or cand > best:
                best = cand
        lower = [a for a in allowed if a < b[p - 1]]
        if lower and p < n:
            cand = prefix + Fraction(lower[-1], r**p)
            for i in range(p + 1, n):
                cand += Fraction(r - 1, r**i)
            cand += Fraction(mmax, r**n)
            if best is None or cand > best:
                best = cand
        prefix += Fraction(b[p - 1], r**p)
    return best if best is not None else Fraction(0)


def mu(P: CantorParams, s: PowerOfBase, c: Rational) -> Fraction:
    """max of the right endpoints of gaps of length >= s that are <= c.

    Returns 0 when no such endpoint exists.  Computed by brute force
    over the endpoint sets and, independently, by the digit closed form
    on every K-avoiding expansion of c; the results are asserted equal.
    """
    c = Fraction(c)
    if s.base != P.r or s.exponent > 0:
        raise DomainError(f"s must be a nonpositive power of {P.r}")
    streams = avoiding_streams(P, c)
    if not streams:
        raise DomainError(f"{c} is not in {P}")
    n = -s.exponent
    brute = _mu_brute(P, n, c)
    for stream in streams:
        closed = _mu_closed(P, n, stream, c)
        assert closed == brute, f"mu closed form mismatch at c={c}, n={n}: {closed} vs {brute}"
    return brute


def digit_via_Z(P: CantorParams, c: Rational, s: PowerOfBase) -> int:
    """Recover a digit of c from two successive mu approximations.

    Finds the unique (i, j) grid cell with
      mu(rs,c) + i*rs <= mu(s,c) < mu(rs,c) + (i+1)*rs  and
      mu(rs,c) + i*rs + j*s <= c < mu(rs,c) + i*rs + (j+1)*s,
    and returns j, the canonical digit of c at the position of s.  When
    c is the left endpoint of a gap the cell is empty at deep positions;
    the canonical digit there is 0, which is returned as the default.
    """
    c = Fraction(c)
    if not contains(P, c):
        raise DomainError(f"{c} is not in {P}")
    if s.base != P.r or s.exponent >= 0:
        raise DomainError(f"s must be a negative power of {P.r}")
    rs = PowerOfBase(P.r, s.exponent + 1)
    mu_rs = mu(P, rs, c)
    mu_s = mu(P, s, c)
    sval, rsval = s.value(), rs.value()
    for i in range(P.r):
        if mu_rs + i * rsval <= mu_s < mu_rs + (i + 1) * rsval:
            base = mu_rs + i * rsval
            for j in range(P.r):
                if base + j * sval <= c < base + (j + 1) * sval:
                    return j
            break
    return 0


def decompose(r: int, x: Rational) -> tuple[Fraction, ...]:
    """Split x in [0,1] into r-1 members of E with sum (r-1)x.

    Component j collects weight r-1 at exactly the fractional positions
    where the digit of x is >= j, so each component expands using only
    the digits 0 and r-1.
    """
    x = Fraction(x)
    if not 0 <= x <= 1:
        raise DomainError(f"need 0 <= x <= 1, got {x}")
    if x == 1:
        stream = ((), (r - 1,))
    else:
        w = expand(x, r)
        stream = (w.frac_preperiod, w.frac_period)
    pre, per = stream
    out = []
    for j in range(1, r):
        mpre = tuple(r - 1 if d >= j else 0 for d in pre)
        mper = tuple(r - 1 if d >= j else 0 for d in per)
        from .expansions import PeriodicReal

        out.append(PeriodicReal(r, 0, (), mpre, mper).value())
    return tuple(out)


def _binary_stream(x: Rational, r: int):
    """A digit stream of x using only 0 and r-1, or None."""
    for pre, per in _frac_streams(x, r):
        if set(pre) | set(per) <= {0, r - 1}:
            return (pre, per)
    return None


def h_digit(r: int, c: tuple, u: PowerOfBase) -> int:
    """How many components carry digit r-1 at the position of u."""
    if u.base != r or u.exponent >= 0:
        raise DomainError(f"u must be a negative power of {r}")
    n = -u.exponent
    count = 0
    for ci in c:
        stream = _binary_stream(ci, r)
        if stream is None:
            raise DomainError(f"{ci} has no expansion over {{0, {r - 1}}}")
        if _stream_digit(stream, n) == r - 1:
            count += 1
    return count
