"""Base-60 numerals in the modern ``1;24,51,10`` notation.

Whole-part digits are separated by ``,``, the radix point is ``;``.  Values
are normalised on construction: leading zero whole digits and trailing
zero fractional digits are dropped, and zero is never negative.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, ParseError
from .numeric import as_rational, is_square, isqrt, round_half_away

BASE = 60


@dataclass(frozen=True)
class SexValue:
    sign: int
    whole: tuple[int, ...]
    frac: tuple[int, ...] = ()

    def __post_init__(self):
        whole = tuple(self.whole)
        frac = tuple(self.frac)
        for dig in whole + frac:
            if not isinstance(dig, int) or not 0 <= dig < BASE:
                raise DomainError(f"sexagesimal digit out of range: {dig!r}")
        if self.sign not in (1, -1):
            raise DomainError(f"sign must be +1 or -1, got {self.sign!r}")
        i = 0
        while i < len(whole) - 1 and whole[i] == 0:
            i += 1
        whole = whole[i:] or (0,)
        while frac and frac[-1] == 0:
            frac = frac[:-1]
        sign = self.sign
        if whole == (0,) and not frac:
            sign = 1
        object.__setattr__(self, "whole", whole)
        object.__setattr__(self, "frac", frac)
        object.__setattr__(self, "sign", sign)

    def __str__(self):
        return format_sex(self)

    def to_rational(self) -> Fraction:
        return sex_to_rational(self)


def format_sex(v: SexValue) -> str:
    text = ",".join(str(d) for d in v.whole)
    if v.frac:
        text += ";" + ",".join(str(d) for d in v.frac)
    return ("-" if v.sign < 0 else "") + text


def parse_sex(text: str) -> SexValue:
    """Parse ``"-"? digit ("," digit)* (";" digit ("," digit)*)?``.

    Each digit is one or two decimal characters with value at most 59.
    Errors carry the 0-based character offset of the problem.
    """
    pos = 0
    sign = 1
    if text.startswith("-"):
        sign = -1
        pos = 1

    def digit_group(pos):
        digits = []
        while True:
            start = pos
            while pos < len(text) and text[pos].isascii() and text[pos].isdigit():
                pos += 1
            tok = text[start:pos]
            if not tok:
                found = text[pos] if pos < len(text) else "end of input"
                raise ParseError(f"expected digit, found {found!r}", offset=pos)
            if len(tok) > 2:
                raise ParseError("digit has more than two characters", offset=start, token=tok)
            if int(tok) >= BASE:
                raise ParseError("digit out of range 0..59", offset=start, token=tok)
            digits.append(int(tok))
            if pos < len(text) and text[pos] == ",":
                pos += 1
                continue
            return digits, pos

    whole, pos = digit_group(pos)
    frac = []
    if pos < len(text) and text[pos] == ";":
        frac, pos = digit_group(pos + 1)
    if pos != len(text):
        raise ParseError(f"unexpected character {text[pos]!r}", offset=pos)
    return SexValue(sign, tuple(whole), tuple(frac))


def as_sex(value) -> SexValue:
    return value if isinstance(value, SexValue) else parse_sex(value)


def sex_to_rational(v: SexValue) -> Fraction:
    v = as_sex(v)
    w = 0
    for dig in v.whole:
        w = w * BASE + dig
    f = 0
    for dig in v.frac:
        f = f * BASE + dig
    return v.sign * (w + Fraction(f, BASE ** len(v.frac)))


def _from_scaled(m: int, k: int) -> SexValue:
    # m / 60**k as a numeral with k fractional places
    sign = -1 if m < 0 else 1
    whole_part, rest = divmod(abs(m), BASE**k)
    frac = []
    for _ in range(k):
        rest, dig = divmod(rest, BASE)
        frac.append(dig)
    frac.reverse()
    whole = []
    while whole_part:
        whole_part, dig = divmod(whole_part, BASE)
        whole.append(dig)
    whole.reverse()
    return SexValue(sign, tuple(whole) or (0,), tuple(frac))


def rational_to_sex(r, frac_digits: int) -> SexValue:
    """Nearest multiple of ``60**-frac_digits``, ties away from zero."""
    if frac_digits < 0:
        raise DomainError("fractional digit count must be non-negative")
    m = round_half_away(as_rational(r) * BASE**frac_digits)
    return _from_scaled(m, frac_digits)


def _check_target(n: int, k: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise DomainError(f"radicand must be a positive integer, got {n!r}")
    if is_square(n):
        raise DomainError(f"{n} is a perfect square; its root is exactly representable")
    if k < 1:
        raise DomainError("at least one fractional digit is required")


def best_sex_approx(n: int, frac_digits: int) -> SexValue:
    """Closest ``m / 60**k`` to ``sqrt(n)``, found with integer arithmetic only.

    ``m0 = isqrt(n * 60**(2k))`` bounds the root from below; ``m0 + 1`` wins
    exactly when ``m0 + 1/2`` lies below the scaled root, i.e. when
    ``(2*m0 + 1)**2 < 4 * n * 60**(2k)``.  Equality is impossible because
    the left side is odd.
    """
    _check_target(n, frac_digits)
    target_sq = n * BASE ** (2 * frac_digits)
    m0 = isqrt(target_sq)
    m = m0 + 1 if (2 * m0 + 1) ** 2 < 4 * target_sq else m0
    return _from_scaled(m, frac_digits)


def best_sex_approx_recip(n: int, frac_digits: int) -> SexValue:
    """Closest ``m / 60**k`` to ``1/sqrt(n)``.

    The scaled target is ``sqrt(60**(2k) / n)``, so ``m0`` is
    ``isqrt(60**(2k) // n)`` and the midpoint test becomes
    ``n * (2*m0 + 1)**2 < 4 * 60**(2k)``.
    """
    _check_target(n, frac_digits)
    scale_sq = BASE ** (2 * frac_digits)
    m0 = isqrt(scale_sq // n)
    m = m0 + 1 if n * (2 * m0 + 1) ** 2 < 4 * scale_sq else m0
    return _from_scaled(m, frac_digits)


def sex_scale(v, c: int, frac_digits: int) -> SexValue:
    """Multiply by a positive integer and round to ``frac_digits`` places."""
    if not isinstance(c, int) or c < 1:
        raise DomainError(f"scale factor must be a positive integer, got {c!r}")
    return rational_to_sex(c * sex_to_rational(as_sex(v)), frac_digits)


def heron_sqrt_sex(n: int, x0, frac_digits: int, max_iter: int = 20) -> list[SexValue]:
    """Iterate ``x -> round((x + n/x) / 2)`` from ``x0``.

    The inner arithmetic is exact; rounding to ``frac_digits`` places
    happens once per step.  Returns ``[x0, x1, ...]``, stopping at the first
    repeated value (not appended again) or after ``max_iter`` steps.
    """
    x = as_sex(x0)
    if frac_digits < 1:
        raise DomainError("at least one fractional digit is required")
    if not isinstance(n, int) or n < 1:
        raise DomainError(f"radicand must be a positive integer, got {n!r}")
    xr = sex_to_rational(x)
    if xr <= 0:
        raise DomainError("starting value must be positive")
    out = [x]
    for _ in range(max_iter):
        nxt = rational_to_sex((xr + n / xr) / 2, frac_digits)
        if nxt == out[-1]:
            break
        out.append(nxt)
        xr = sex_to_rational(nxt)
    return out
