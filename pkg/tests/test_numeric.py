import random
from decimal import Decimal, getcontext
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wedge.errors import DomainError, ParseError
from wedge.numeric import (
    QuadValue,
    approx_decimal,
    format_rat,
    isqrt,
    parse_rat,
    quad_add,
    quad_div,
    quad_floor,
    quad_mul,
    quad_sign,
    quad_sub,
    rat_add,
    rat_cmp,
    rat_div,
    rat_mul,
    rat_sub,
)

SQRT2 = QuadValue(0, 1, 2)

rationals = st.fractions(max_denominator=10**6).filter(lambda f: abs(f) < 10**6)
radicands = st.sampled_from([2, 3, 5, 6, 7, 17])


def assert_canonical(r: Fraction):
    from math import gcd

    assert r.denominator > 0
    assert gcd(abs(r.numerator), r.denominator) == 1


def decimal_value(x: QuadValue) -> Decimal:
    # independent oracle: 80-digit decimal arithmetic
    getcontext().prec = 80
    a = Decimal(x.a.numerator) / Decimal(x.a.denominator)
    b = Decimal(x.b.numerator) / Decimal(x.b.denominator)
    return a + b * Decimal(x.d).sqrt()


class TestRational:
    def test_add(self):
        assert rat_add(Fraction(1, 2), Fraction(1, 3)) == Fraction(5, 6)

    def test_mul_side_squared(self):
        assert rat_mul(60, 60) == 3600

    def test_div_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            rat_div(1, 0)

    def test_cmp_total(self):
        assert rat_cmp(Fraction(1, 3), Fraction(1, 2)) == -1
        assert rat_cmp(2, Fraction(4, 2)) == 0
        assert rat_cmp(Fraction(-1, 7), Fraction(-2, 7)) == 1

    @given(rationals, rationals)
    def test_results_canonical(self, x, y):
        for r in (rat_add(x, y), rat_sub(x, y), rat_mul(x, y)):
            assert_canonical(r)
        if y:
            assert_canonical(rat_div(x, y))

    @pytest.mark.parametrize(
        "text,value",
        [("225", Fraction(225)), ("5/6", Fraction(5, 6)), ("-7/3", Fraction(-7, 3)), ("10/4", Fraction(5, 2))],
    )
    def test_parse(self, text, value):
        assert parse_rat(text) == value

    @pytest.mark.parametrize("text", ["1/0", "1.5", "", "1/-2", "+3", "1e3", " 1"])
    def test_parse_rejects(self, text):
        with pytest.raises(ParseError):
            parse_rat(text)

    def test_format(self):
        assert format_rat(Fraction(225)) == "225"
        assert format_rat(Fraction(10, 12)) == "5/6"
        assert format_rat(Fraction(-3, 6)) == "-1/2"


class TestIsqrt:
    @pytest.mark.parametrize("n,r", [(0, 0), (16, 4), (17, 4), (1, 1), (3, 1)])
    def test_examples(self, n, r):
        assert isqrt(n) == r

    def test_negative(self):
        with pytest.raises(DomainError):
            isqrt(-1)

    def test_defining_inequality_to_a_million(self):
        r = 0
        for n in range(10**6 + 1):
            while (r + 1) * (r + 1) <= n:
                r += 1
            assert isqrt(n) == r
        assert r * r <= 10**6 < (r + 1) ** 2


class TestQuadArithmetic:
    def test_conjugate_product(self):
        assert quad_mul(QuadValue(1, 1), QuadValue(1, -1)) == QuadValue(-1, 0)

    def test_sqrt2_squared(self):
        assert quad_mul(SQRT2, SQRT2) == QuadValue(2, 0)

    def test_add(self):
        assert quad_add(QuadValue(1, 1), QuadValue(2, -1)) == QuadValue(3, 0)

    def test_sub(self):
        assert quad_sub(QuadValue(1, 1), QuadValue(1, 1)) == QuadValue(0, 0)

    @pytest.mark.parametrize(
        "x,y,q",
        [
            (QuadValue(2, 0), SQRT2, SQRT2),
            (QuadValue(1, 0), SQRT2, QuadValue(0, Fraction(1, 2))),
            (QuadValue(3, 1), QuadValue(3, 1), QuadValue(1, 0)),
        ],
    )
    def test_div(self, x, y, q):
        assert quad_div(x, y) == q
        assert quad_mul(quad_div(x, y), y) == x

    def test_div_zero(self):
        with pytest.raises(ZeroDivisionError):
            quad_div(QuadValue(1, 1), QuadValue(0, 0))

    def test_mixed_radicands(self):
        with pytest.raises(DomainError):
            quad_add(QuadValue(1, 1, 2), QuadValue(1, 1, 3))
        with pytest.raises(DomainError):
            QuadValue(1, 1, 2) * QuadValue(1, 1, 3)

    @pytest.mark.parametrize("d", [0, -2, 1, 4, 9, 144])
    def test_bad_radicand(self, d):
        with pytest.raises(DomainError):
            QuadValue(1, 1, d)

    @settings(max_examples=200)
    @given(rationals, rationals, rationals, rationals, rationals, rationals, radicands)
    def test_field_axioms(self, a1, b1, a2, b2, a3, b3, d):
        x, y, z = QuadValue(a1, b1, d), QuadValue(a2, b2, d), QuadValue(a3, b3, d)
        assert (x * y) * z == x * (y * z)
        assert (x + y) + z == x + (y + z)
        assert x * (y + z) == x * y + x * z
        assert x * y == y * x
        if y:
            assert (x / y) * y == x

    def test_mixes_with_rationals(self):
        assert 1 + SQRT2 == QuadValue(1, 1)
        assert 2 - SQRT2 == QuadValue(2, -1)
        assert Fraction(1, 2) * SQRT2 == QuadValue(0, Fraction(1, 2))
        assert 2 / SQRT2 == SQRT2


class TestSign:
    @pytest.mark.parametrize(
        "x,s",
        [
            (QuadValue(0, 0), 0),
            (QuadValue(-1, 1), 1),
            (QuadValue(3, -2), 1),
            (QuadValue(-3, 2), -1),
            (QuadValue(1, -1), -1),
            (QuadValue(0, -5), -1),
            (QuadValue(-7, 0), -1),
        ],
    )
    def test_examples(self, x, s):
        assert quad_sign(x) == s

    def test_agrees_with_decimal_rendering(self):
        rng = random.Random(7289)
        for _ in range(10**4):
            d = rng.choice([2, 3, 5, 7, 17])
            # near-cancelling values exercise the a^2 vs d b^2 branch
            b = Fraction(rng.randint(-10**4, 10**4), rng.randint(1, 10**3))
            a = -b * Fraction(rng.randint(1, 10**6), 10**6) * rng.choice([1, 2]) if rng.random() < 0.5 else Fraction(
                rng.randint(-10**6, 10**6), rng.randint(1, 10**3)
            )
            x = QuadValue(a, b, d)
            rendered = Decimal(approx_decimal(x, 20))
            oracle = decimal_value(x)
            s = quad_sign(x)
            assert s == (oracle > 0) - (oracle < 0)
            if abs(oracle) > Decimal("1e-19"):
                assert s == (rendered > 0) - (rendered < 0)


class TestApproxDecimal:
    def test_sqrt2_seven_digits(self):
        # isqrt(2 * 10**14) = 14142135 and the next digit is 6, so round up
        assert isqrt(2 * 10**14) == 14142135
        assert isqrt(2 * 10**16) % 10 == 6
        assert approx_decimal(SQRT2, 7) == "1.4142136"

    def test_rational(self):
        assert approx_decimal(QuadValue(Fraction(3, 2), 0), 3) == "1.500"
        assert approx_decimal(Fraction(3, 2), 3) == "1.500"

    def test_tablet_error(self):
        x = SQRT2 - Fraction(305470, 216000)
        assert approx_decimal(x, 9) == "0.000000599"

    def test_negative(self):
        assert approx_decimal(-SQRT2, 7) == "-1.4142136"
        assert approx_decimal(Fraction(-1, 4), 1) == "-0.3"  # tie, away from zero
        assert approx_decimal(Fraction(1, 4), 1) == "0.3"

    def test_thirty_root_two(self):
        assert approx_decimal(30 * SQRT2, 7) == "42.4264069"

    @settings(max_examples=300)
    @given(rationals, rationals, radicands, st.integers(1, 25))
    def test_error_bound(self, a, b, d, k):
        x = QuadValue(a, b, d)
        text = approx_decimal(x, k)
        err = x - parse_decimal(text)
        assert quad_sign(abs(err) - Fraction(1, 2 * 10**k)) <= 0

    @given(rationals, radicands)
    def test_floor(self, a, d):
        x = QuadValue(a, 1, d)
        m = quad_floor(x)
        assert quad_sign(x - m) >= 0 and quad_sign(x - (m + 1)) < 0


def parse_decimal(text: str) -> Fraction:
    return Fraction(Decimal(text))
