"""Eventually periodic base-r expansions of rationals.

Words have the shape  s a_{p-1} .. a_0 * b_1 b_2 ...  with a single sign
digit s in {0, r-1}.  The integer part is read in r's complement: its
value is  sum(digit_i * r^i) - [s = r-1] * r^(p+1),  so prepending extra
copies of the sign digit never changes the value.  The fractional part is
the usual sum b_i r^(-i).  Every rational has exactly one expansion whose
fractional digits are not eventually r-1 (the canonical one); it also has
a second expansion ending in (r-1)^omega iff its denominator divides a
power of r and the value is nonzero.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import DomainError

Rational = Fraction


def _primitive_period(period: tuple[int, ...]) -> tuple[int, ...]:
    n = len(period)
    for d in range(1, n + 1):
        if n % d == 0 and period == period[:d] * (n // d):
            return period[:d]
    return period


@dataclass(frozen=True)
class PeriodicReal:
    """Normalized eventually periodic base-r word for a rational number."""

    base: int
    sign_digit: int
    integer_digits: tuple[int, ...]
    frac_preperiod: tuple[int, ...]
    frac_period: tuple[int, ...]

    def __post_init__(self):
        r = self.base
        if r < 2:
            raise DomainError(f"base must be >= 2, got {r}")
        if self.sign_digit not in (0, r - 1):
            raise DomainError(f"sign digit must be 0 or {r - 1}")
        if not self.frac_period:
            raise DomainError("period must be nonempty")
        for d in self.integer_digits + self.frac_preperiod + self.frac_period:
            if not 0 <= d < r:
                raise DomainError(f"digit {d} out of range for base {r}")
        # normalize: primitive period, shortest preperiod, no redundant
        # leading copies of the sign digit
        per = _primitive_period(self.frac_period)
        pre = list(self.frac_preperiod)
        while pre and pre[-1] == per[-1]:
            per = (per[-1],) + per[:-1]
            pre.pop()
        per = _primitive_period(per)
        ints = list(self.integer_digits)
        while ints and ints[0] == self.sign_digit:
            ints.pop(0)
        object.__setattr__(self, "integer_digits", tuple(ints))
        object.__setattr__(self, "frac_preperiod", tuple(pre))
        object.__setattr__(self, "frac_period", tuple(per))

    def integer_value(self) -> int:
        r = self.base
        word = (self.sign_digit,) + self.integer_digits
        v = 0
        for d in word:
            v = v * r + d
        if self.sign_digit == r - 1:
            v -= r ** len(word)
        return v

    def value(self) -> Fraction:
        r = self.base
        pre, per = self.frac_preperiod, self.frac_period
        p, l = len(pre), len(per)
        num = 0
        for d in pre:
            num = num * r + d
        frac = Fraction(num, r**p)
        pernum = 0
        for d in per:
            pernum = pernum * r + d
        frac += Fraction(pernum, (r**l - 1) * r**p)
        return self.integer_value() + frac

    def digit_at(self, n: int) -> int:
        """Digit in the position of weight base^n (sign-extended upward)."""
        if n >= 0:
            ints = self.integer_digits
            if n < len(ints):
                return ints[len(ints) - 1 - n]
            return self.sign_digit
        i = -n
        pre, per = self.frac_preperiod, self.frac_period
        if i <= len(pre):
            return pre[i - 1]
        return per[(i - len(pre) - 1) % len(per)]

    def is_terminating(self) -> bool:
        return self.frac_period == (0,)

    def __str__(self) -> str:
        r = self.base

        def seg(digits):
            if r <= 10:
                return "".join(str(d) for d in digits)
            return ",".join(str(d) for d in digits)

        intpart = seg((self.sign_digit,) + self.integer_digits)
        return f"{r}: {intpart}.{seg(self.frac_preperiod)}({seg(self.frac_period)})"


def _int_word(n: int, r: int) -> tuple[int, tuple[int, ...]]:
    """Shortest r's-complement word (sign digit, remaining digits) for n."""
    if n >= 0:
        digits = []
        v = n
        while v:
            digits.append(v % r)
            v //= r
        return 0, tuple(reversed(digits))
    length = 1
    while -(r**length) > n:
        length += 1
    w = n + r ** (length + 1)
    digits = []
    for _ in range(length + 1):
        digits.append(w % r)
        w //= r
    digits.reverse()
    assert digits[0] == r - 1
    return r - 1, tuple(digits[1:])


def expand(q: Rational, r: int) -> PeriodicReal:
    """Canonical base-r expansion of q (never ends in (r-1)^omega)."""
    if r < 2:
        raise DomainError(f"base must be >= 2, got {r}")
    q = Fraction(q)
    n = q.numerator // q.denominator
    frac = q - n
    sign, ints = _int_word(n, r)
    if frac == 0:
        return PeriodicReal(r, sign, ints, (), (0,))
    digits: list[int] = []
    seen: dict[Fraction, int] = {}
    rem = frac
    while rem not in seen:
        seen[rem] = len(digits)
        rem *= r
        d = rem.numerator // rem.denominator
        digits.append(d)
        rem -= d
    cut = seen[rem]
    return PeriodicReal(r, sign, ints, tuple(digits[:cut]), tuple(digits[cut:]))


def evaluate(w: PeriodicReal) -> Rational:
    return w.value()


def other_expansion(w: PeriodicReal) -> PeriodicReal | None:
    """The second base-r expansion of the same value, if one exists.

    The canonical expansion of an r-adic rational x != 0 terminates; its
    twin decrements the last nonzero digit and continues with (r-1)^omega.
    Zero and non-r-adic rationals have a unique expansion.
    """
    r = w.base
    if w.frac_period == (0,):
        if w.frac_preperiod:
            pre = w.frac_preperiod
            new_pre = pre[:-1] + (pre[-1] - 1,)
            return PeriodicReal(r, w.sign_digit, w.integer_digits, new_pre, (r - 1,))
        n = w.integer_value()
        if n == 0:
            return None
        sign, ints = _int_word(n - 1, r)
        return PeriodicReal(r, sign, ints, (), (r - 1,))
    if w.frac_period == (r - 1,):
        if w.frac_preperiod:
            pre = w.frac_preperiod
            new_pre = pre[:-1] + (pre[-1] + 1,)
            return PeriodicReal(r, w.sign_digit, w.integer_digits, new_pre, (0,))
        sign, ints = _int_word(w.integer_value() + 1, r)
        return PeriodicReal(r, sign, ints, (), (0,))
    return None


def is_r_adic(q: Rational, r: int) -> bool:
    """True iff q has a finite base-r expansion (denominator divides r^d)."""
    den = Fraction(q).denominator
    while den > 1:
        g = gcd(den, r)
        if g == 1:
            return False
        while den % g == 0:
            den //= g
    return True


@dataclass(frozen=True)
class PowerOfBase:
    base: int
    exponent: int

    def value(self) -> Fraction:
        if self.exponent >= 0:
            return Fraction(self.base**self.exponent)
        return Fraction(1, self.base ** (-self.exponent))

    def __str__(self) -> str:
        return f"{self.base}^{self.exponent}"


def power_of(q: Rational, r: int) -> int | None:
    """Exponent n with q = r^n, or None if q is not an integer power of r."""
    q = Fraction(q)
    if q <= 0:
        return None
    if q.numerator == 1 and q.denominator == 1:
        return 0
    if q.denominator == 1:
        n, v = 0, q.numerator
        while v % r == 0:
            v //= r
            n += 1
        return n if v == 1 else None
    if q.numerator == 1:
        n, v = 0, q.denominator
        while v % r == 0:
            v //= r
            n += 1
        return -n if v == 1 else None
    return None


def parse_rational(text: str) -> Rational:
    return Fraction(text.strip())


def format_rational(q: Rational) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _parse_seg(seg: str, base: int) -> tuple[int, ...]:
    seg = seg.strip()
    if not seg:
        return ()
    if base <= 10:
        return tuple(int(c) for c in seg)
    return tuple(int(p) for p in seg.split(","))


def parse_periodic(text: str) -> PeriodicReal:
    """Inverse of str(PeriodicReal), e.g. "3: 0.12(02)"."""
    base_s, _, rest = text.partition(":")
    base = int(base_s)
    rest = rest.strip()
    intpart, _, frac = rest.partition(".")
    pre_s, _, per_s = frac.partition("(")
    per_s = per_s.rstrip(")")
    ints = _parse_seg(intpart, base)
    if not ints:
        raise DomainError(f"missing integer part in {text!r}")
    return PeriodicReal(base, ints[0], ints[1:], _parse_seg(pre_s, base), _parse_seg(per_s, base))


def parse_power(text: str) -> PowerOfBase:
    base_s, _, exp_s = text.partition("^")
    return PowerOfBase(int(base_s), int(exp_s))
