from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from spinshare.errors import DomainError
from spinshare.exact import (
    decimal_str,
    int_nth_root,
    parse_scalar,
    pow2_bracket,
    root_bracket,
)


class TestParseScalar:
    def test_fraction_string(self):
        assert parse_scalar("4/125") == Fraction(4, 125)

    def test_decimal_string_is_exact(self):
        assert parse_scalar("0.032") == Fraction(4, 125)
        assert parse_scalar("0.682") == Fraction(682, 1000)

    def test_integers_pass_through(self):
        assert parse_scalar(1) == Fraction(1)
        assert parse_scalar(Fraction(1, 3)) == Fraction(1, 3)

    def test_floats_rejected(self):
        with pytest.raises(DomainError):
            parse_scalar(0.1)

    def test_garbage_rejected(self):
        with pytest.raises(DomainError):
            parse_scalar("1/0")
        with pytest.raises(DomainError):
            parse_scalar("pi")


class TestDecimalStr:
    def test_default_precision(self):
        assert decimal_str(Fraction(1, 3)) == "0.333333333333333"

    def test_exact_values_stay_short(self):
        assert decimal_str(Fraction(1, 2)) == "0.5"
        assert decimal_str(Fraction(1)) == "1"

    def test_requested_digits(self):
        assert decimal_str(Fraction(2, 3), 4) == "0.6667"

    def test_rejects_zero_digits(self):
        with pytest.raises(DomainError):
            decimal_str(Fraction(1, 3), 0)


class TestIntNthRoot:
    @pytest.mark.parametrize("x,n,expected", [(0, 3, 0), (1, 5, 1), (8, 3, 2), (80, 3, 4), (81, 4, 3), (2**60, 2, 2**30)])
    def test_known_roots(self, x, n, expected):
        assert int_nth_root(x, n) == expected

    @given(st.integers(0, 10**12), st.integers(1, 8))
    def test_floor_property(self, x, n):
        r = int_nth_root(x, n)
        assert r**n <= x < (r + 1) ** n

    def test_rejects_negative(self):
        with pytest.raises(DomainError):
            int_nth_root(-1, 2)


class TestBrackets:
    @given(st.integers(0, 10**9), st.integers(1, 6), st.integers(1, 25))
    def test_root_bracket_encloses(self, x, n, digits):
        lo, hi = root_bracket(x, n, digits)
        assert lo**n <= x
        assert hi**n >= x
        assert hi - lo <= Fraction(1, 10**digits)

    def test_pow2_bracket_exact_for_integers(self):
        assert pow2_bracket(Fraction(3), 10) == (Fraction(8), Fraction(8))

    def test_pow2_bracket_three_quarters(self):
        lo, hi = pow2_bracket(Fraction(3, 4), 40)
        # 2**(3/4) = 1.68179283050742908606...
        assert lo <= Fraction("1.6817928305074290860622509524664297900800") <= hi
        assert hi - lo <= Fraction(1, 10**40)
