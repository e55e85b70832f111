"""Exact rationals and the quadratic fields Q(sqrt(d)).

Rationals are :class:`fractions.Fraction` values, which are always kept in
lowest terms with a positive denominator.  Quadratic values ``a + b*sqrt(d)``
are :class:`QuadValue` instances; their sign is decided with integer
arithmetic only, and decimal renderings come from scaled integer square
roots rather than hardware floats.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

from .errors import DomainError, ParseError

BigRational = Fraction

_RAT_RE = re.compile(r"-?[0-9]+(?:/[0-9]+)?\Z")


def as_rational(value) -> Fraction:
    """Coerce an int, Fraction or canonical rational text to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Rational):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rat(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def parse_rat(text: str) -> Fraction:
    """Parse ``"-"? INT ("/" POSINT)?``; decimals and floats are rejected."""
    if not _RAT_RE.match(text):
        raise ParseError("malformed rational", offset=0, token=text)
    num, _, den = text.partition("/")
    if den and int(den) == 0:
        raise ParseError("zero denominator", offset=text.index("/") + 1, token=text)
    return Fraction(int(num), int(den) if den else 1)


def format_rat(r) -> str:
    """Canonical text: ``num/den`` in lowest terms, or a bare integer."""
    r = as_rational(r)
    if r.denominator == 1:
        return str(r.numerator)
    return f"{r.numerator}/{r.denominator}"


def rat_add(x, y) -> Fraction:
    return as_rational(x) + as_rational(y)


def rat_sub(x, y) -> Fraction:
    return as_rational(x) - as_rational(y)


def rat_mul(x, y) -> Fraction:
    return as_rational(x) * as_rational(y)


def rat_div(x, y) -> Fraction:
    y = as_rational(y)
    if y == 0:
        raise ZeroDivisionError("rational division by zero")
    return as_rational(x) / y


def rat_cmp(x, y) -> int:
    """Three-way comparison returning -1, 0 or 1."""
    x, y = as_rational(x), as_rational(y)
    return (x > y) - (x < y)


def isqrt(n: int) -> int:
    """Floor of the square root of a non-negative integer."""
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError("isqrt requires an integer")
    if n < 0:
        raise DomainError(f"isqrt of negative number {n}")
    return math.isqrt(n)


def is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


def _sgn(x) -> int:
    return (x > 0) - (x < 0)


def _floor_rat(r: Fraction) -> int:
    return r.numerator // r.denominator


@dataclass(frozen=True)
class QuadValue:
    """The exact number ``a + b*sqrt(d)`` with ``d`` a positive non-square integer.

    Plain ints and Fractions mix freely with a QuadValue in arithmetic;
    two QuadValues must share the same radicand.
    """

    a: Fraction
    b: Fraction
    d: int = 2

    def __post_init__(self):
        object.__setattr__(self, "a", as_rational(self.a))
        object.__setattr__(self, "b", as_rational(self.b))
        d = self.d
        if not isinstance(d, int) or isinstance(d, bool) or d <= 0:
            raise DomainError(f"radicand must be a positive integer, got {d!r}")
        if is_square(d):
            raise DomainError(f"radicand {d} is a perfect square")

    @classmethod
    def sqrt(cls, d: int) -> "QuadValue":
        return cls(0, 1, d)

    @classmethod
    def rational(cls, r, d: int = 2) -> "QuadValue":
        return cls(r, 0, d)

    def _coerce(self, other) -> "QuadValue":
        if isinstance(other, QuadValue):
            if other.d != self.d:
                raise DomainError(f"mixed radicands {self.d} and {other.d}")
            return other
        if isinstance(other, (Rational, str)) and not isinstance(other, bool):
            return QuadValue(as_rational(other), 0, self.d)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QuadValue(self.a + other.a, self.b + other.b, self.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadValue(-self.a, -self.b, self.d)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QuadValue(self.a - other.a, self.b - other.b, self.d)

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a1, b1, a2, b2 = self.a, self.b, other.a, other.b
        return QuadValue(a1 * a2 + self.d * b1 * b2, a1 * b2 + a2 * b1, self.d)

    __rmul__ = __mul__

    def conjugate(self) -> "QuadValue":
        return QuadValue(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        """``a^2 - d*b^2``; zero only for the zero element since d is non-square."""
        return self.a * self.a - self.d * self.b * self.b

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = other.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt(%d))" % self.d)
        num = self * other.conjugate()
        return QuadValue(num.a / n, num.b / n, self.d)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        out = QuadValue(1, 0, self.d)
        for _ in range(k):
            out = out * self
        return out

    def sign(self) -> int:
        return quad_sign(self)

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def is_rational(self) -> bool:
        return self.b == 0

    def __str__(self):
        return f"{format_rat(self.a)} + {format_rat(self.b)}*sqrt({self.d})"

    # ordering goes through the exact sign
    def _cmp(self, other) -> int:
        other = self._coerce(other)
        if other is NotImplemented:
            raise TypeError(f"cannot compare QuadValue with {type(other).__name__}")
        return quad_sign(self - other)

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0


def _check_same(x: QuadValue, y: QuadValue) -> None:
    if x.d != y.d:
        raise DomainError(f"mixed radicands {x.d} and {y.d}")


def quad_add(x: QuadValue, y: QuadValue) -> QuadValue:
    _check_same(x, y)
    return x + y


def quad_sub(x: QuadValue, y: QuadValue) -> QuadValue:
    _check_same(x, y)
    return x - y


def quad_mul(x: QuadValue, y: QuadValue) -> QuadValue:
    _check_same(x, y)
    return x * y


def quad_div(x: QuadValue, y: QuadValue) -> QuadValue:
    _check_same(x, y)
    return x / y


def quad_sign(x: QuadValue) -> int:
    """Exact sign of ``a + b*sqrt(d)``.

    When ``a`` and ``b`` agree in sign (or one vanishes) the answer is
    immediate.  Otherwise the sign is that of whichever term dominates,
    decided by comparing ``a^2`` with ``d*b^2``.
    """
    sa, sb = _sgn(x.a), _sgn(x.b)
    if sb == 0:
        return sa
    if sa == 0 or sa == sb:
        return sb
    # signs oppose; the term of larger magnitude wins
    return sa * _sgn(x.a * x.a - x.d * x.b * x.b)


def quad_floor(x) -> int:
    """Largest integer not exceeding ``x`` (a QuadValue or rational)."""
    if not isinstance(x, QuadValue):
        return _floor_rat(as_rational(x))
    # floor(|b| sqrt d) == isqrt(floor(b^2 d))
    t = isqrt(_floor_rat(x.b * x.b * x.d))
    m = _floor_rat(x.a + t) if x.b >= 0 else _floor_rat(x.a - t - 1)
    while quad_sign(x - m) < 0:
        m -= 1
    while quad_sign(x - (m + 1)) >= 0:
        m += 1
    return m


def round_half_away(x) -> int:
    """Nearest integer to ``x``, ties away from zero."""
    half = Fraction(1, 2)
    if isinstance(x, QuadValue):
        if quad_sign(x) >= 0:
            return quad_floor(x + half)
        return -quad_floor(-x + half)
    x = as_rational(x)
    if x >= 0:
        return _floor_rat(x + half)
    return -_floor_rat(-x + half)


def approx_decimal(x, k: int) -> str:
    """Render ``x`` with ``k`` fractional decimal digits, rounding half away from zero.

    Accepts a QuadValue or any exact rational.  The result is within
    ``0.5 * 10**-k`` of the true value.
    """
    if k < 1:
        raise DomainError("digit count must be at least 1")
    n = round_half_away(x * 10**k)
    sign = "-" if n < 0 else ""
    whole, frac = divmod(abs(n), 10**k)
    return f"{sign}{whole}.{frac:0{k}d}"
