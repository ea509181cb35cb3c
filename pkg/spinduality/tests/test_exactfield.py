"""
Tests for exact arithmetic in Q(i, sqrt 2).
"""

from fractions import Fraction

import pytest

from spinduality.services.exactfield import (
    IMAG,
    ONE,
    SQRT2,
    ZERO,
    ArithOp,
    FieldClass,
    FieldElem,
    arith,
    classify,
    field_sum,
    invert,
)


@pytest.mark.unit
class TestArithmetic:
    """Test cases for the field operations."""

    def test_generator_squares(self):
        """Test i^2 = -1, r2^2 = 2 and (i r2)^2 = -2."""
        assert IMAG * IMAG == -1
        assert SQRT2 * SQRT2 == 2
        assert (IMAG * SQRT2) ** 2 == -2

    def test_mixing_with_ints(self):
        """Test that Python ints coerce on either side."""
        assert 2 - SQRT2 == FieldElem(2, 0, -1, 0)
        assert 3 * IMAG == FieldElem(0, 3, 0, 0)
        assert 1 / SQRT2 == FieldElem.sqrt2_power(-1)
        assert IMAG + 1 == 1 + IMAG

    def test_inverse(self):
        """Test that x * x^-1 == 1 for non-rational elements."""
        for x in (1 + SQRT2, 1 + IMAG + SQRT2, IMAG * SQRT2 - 3, FieldElem(1, 2, 3, 4)):
            assert x * x.inverse() == ONE
            assert x / x == ONE

    def test_negative_powers(self):
        """Test integer powers with negative exponents."""
        assert SQRT2**-2 == FieldElem.rational(1, 2)
        assert (1 + IMAG) ** -1 * (1 + IMAG) == ONE

    def test_division_by_zero(self):
        """Test that inverting zero raises ZeroDivisionError."""
        with pytest.raises(ZeroDivisionError):
            ZERO.inverse()
        with pytest.raises(ZeroDivisionError):
            invert(0)
        with pytest.raises(ZeroDivisionError):
            ONE / ZERO

    def test_sqrt2_power(self):
        """Test (sqrt 2)**e for positive, zero and negative e."""
        assert FieldElem.sqrt2_power(0) == 1
        assert FieldElem.sqrt2_power(2) == 2
        assert FieldElem.sqrt2_power(3) == 2 * SQRT2
        assert FieldElem.sqrt2_power(-2) == FieldElem.rational(1, 2)
        assert FieldElem.sqrt2_power(-3) * FieldElem.sqrt2_power(3) == 1

    def test_conjugates_and_norm(self):
        """Test both automorphisms and the rational norm."""
        x = FieldElem(1, 2, 3, 4)
        assert x.conjugate_i() == FieldElem(1, -2, 3, -4)
        assert x.conjugate_sqrt2() == FieldElem(1, 2, -3, -4)
        assert SQRT2.norm() == 4
        assert IMAG.norm() == 1
        assert FieldElem.rational(3).norm() == 81

    def test_arith_dispatch(self):
        """Test the arith() helper over every operation."""
        assert arith(2, 3, ArithOp.ADD) == 5
        assert arith(2, 3, "sub") == -1
        assert arith(IMAG, IMAG, ArithOp.MUL) == -1

    def test_field_sum(self):
        """Test summing a sequence of elements."""
        assert field_sum([ONE, IMAG, -ONE, SQRT2]) == IMAG + SQRT2
        assert field_sum([]) == ZERO


@pytest.mark.unit
class TestClassification:
    """Test cases for classify()."""

    @pytest.mark.parametrize(
        "value, field_class, integral",
        [
            (FieldElem.rational(3), FieldClass.RATIONAL, True),
            (FieldElem.rational(1, 2), FieldClass.RATIONAL, False),
            (IMAG, FieldClass.GAUSSIAN, True),
            (SQRT2 / 2, FieldClass.REAL_QUADRATIC, False),
            (IMAG * SQRT2, FieldClass.GENERIC, True),
            (1 + IMAG + SQRT2, FieldClass.GENERIC, True),
        ],
    )
    def test_classify(self, value, field_class, integral):
        """Test the subfield and integrality of representative elements."""
        result = classify(value)
        assert result.field_class is field_class
        assert result.integral is integral

    def test_rational_integer(self):
        """Test is_rational_integer on integers, fractions and irrationals."""
        assert FieldElem.rational(-4).is_rational_integer()
        assert not FieldElem.rational(1, 3).is_rational_integer()
        assert not SQRT2.is_rational_integer()


@pytest.mark.unit
class TestTextForms:
    """Test cases for serialization and display."""

    def test_to_text(self):
        """Test the canonical serialization."""
        assert ONE.to_text() == "1/1 + 0/1*i + 0/1*r2 + 0/1*ir2"
        assert FieldElem(Fraction(1, 2), -1, 0, 3).to_text() == (
            "1/2 + -1/1*i + 0/1*r2 + 3/1*ir2"
        )

    def test_parse_inverts_to_text(self):
        """Test that parse(to_text(x)) == x."""
        x = FieldElem(Fraction(-7, 3), 2, Fraction(5, 4), -1)
        assert FieldElem.parse(x.to_text()) == x

    @pytest.mark.parametrize(
        "text", ["junk", "1/0 + 0/1*i + 0/1*r2 + 0/1*ir2", "1 + 2*i"]
    )
    def test_parse_rejects_malformed(self, text):
        """Test that malformed serializations raise ValueError."""
        with pytest.raises(ValueError):
            FieldElem.parse(text)

    @pytest.mark.parametrize(
        "value, expected",
        [
            (ZERO, "0"),
            (FieldElem.rational(2), "2"),
            (-IMAG * FieldElem.rational(1, 2), "-1/2*i"),
            (3 * SQRT2, "3*r2"),
            (1 + SQRT2, "1 + r2"),
            (1 - IMAG, "1 - i"),
        ],
    )
    def test_str(self, value, expected):
        """Test the compact human-readable form."""
        assert str(value) == expected

    def test_hash_consistent_with_equality(self):
        """Test that equal elements hash equally and work as dict keys."""
        assert hash(FieldElem.rational(3)) == hash(FieldElem(3))
        table = {1 + SQRT2: "a"}
        assert table[SQRT2 + 1] == "a"
