import random
from fractions import Fraction

import pytest

from cliffchar.core import Multivector, Signature, random_multivector
from cliffchar.expr import (
    ExpressionError,
    blade_name,
    format_multivector,
    format_rational,
    parse_expression,
)


def s(p, q):
    return Signature(p, q)


class TestParse:
    def test_blade_sum(self):
        sig = s(5, 0)
        got = parse_expression("e1 + e5 + e15", sig)
        expected = (
            Multivector.basis_vector(sig, 1)
            + Multivector.basis_vector(sig, 5)
            + Multivector.basis_blade(sig, 0b10001)
        )
        assert got == expected

    def test_rational_coefficients(self):
        sig = s(2, 0)
        got = parse_expression("2 + 3/2*e12", sig)
        assert got.coeffs == (2, 0, 0, Fraction(3, 2))

    def test_power(self):
        sig = s(2, 0)
        assert parse_expression("(e1+e2)^2", sig) == Multivector.scalar(sig, 2)

    def test_unary_minus_and_precedence(self):
        sig = s(2, 0)
        got = parse_expression("-e1 + 2*e2 - -3", sig)
        assert got.coeffs == (3, -1, 2, 0)
        assert parse_expression("2*e1^2", sig) == Multivector.scalar(sig, 2)

    def test_identity_blade(self):
        sig = s(1, 1)
        assert parse_expression("e", sig) == Multivector.identity(sig)
        assert parse_expression("5*e", sig) == Multivector.scalar(sig, 5)

    def test_parenthesized_indices(self):
        sig = Signature(6, 4)
        got = parse_expression("e(10)", sig)
        assert got == Multivector.basis_vector(sig, 10)
        got = parse_expression("e1(10)", sig)
        assert got == Multivector.basis_blade(sig, (1 << 9) | 1)

    def test_zero_literal(self):
        assert parse_expression("0", s(2, 0)) == Multivector.zero(s(2, 0))


class TestParseErrors:
    @pytest.mark.parametrize(
        "text",
        ["e1 +", "* e1", "2 e1", "(e1", "e1)", "1/0", "e0", "e21", "e13 + e9", "^2", "foo"],
    )
    def test_rejects(self, text):
        with pytest.raises(ExpressionError):
            parse_expression(text, s(3, 0))

    def test_position_reported(self):
        with pytest.raises(ExpressionError) as err:
            parse_expression("e1 + $", s(2, 0))
        assert err.value.pos == 5

    def test_index_out_of_range(self):
        with pytest.raises(ExpressionError):
            parse_expression("e4", s(2, 1))

    def test_fractional_exponent(self):
        with pytest.raises(ExpressionError):
            parse_expression("e1^1/2", s(2, 0))


class TestFormat:
    def test_rational(self):
        assert format_rational(4) == "4"
        assert format_rational(Fraction(4, 1)) == "4"
        assert format_rational(Fraction(-3, 2)) == "-3/2"

    def test_blade_names(self):
        assert blade_name(0) == "e"
        assert blade_name(0b10001) == "e15"
        assert blade_name(1 << 10) == "e(11)"

    def test_zero(self):
        assert format_multivector(Multivector.zero(s(2, 0))) == "0"

    def test_mixed_terms(self):
        sig = s(2, 0)
        u = Multivector(sig, (Fraction(1, 2), -1, 0, 3))
        assert format_multivector(u) == "1/2 - e1 + 3*e12"

    def test_roundtrip(self):
        rng = random.Random(83)
        for sig in [s(1, 0), s(2, 1), s(3, 3)]:
            for _ in range(10):
                u = random_multivector(sig, rng)
                assert parse_expression(format_multivector(u), sig) == u

    def test_roundtrip_rational(self):
        sig = s(2, 0)
        u = Multivector(sig, (Fraction(-1, 3), Fraction(2, 7), 0, 5))
        assert parse_expression(format_multivector(u), sig) == u
