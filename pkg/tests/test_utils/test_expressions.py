"""Tests for numeric expression parsing and π formatting."""

import math

import pytest

from src.errors import ParseError
from src.utils.expressions import format_pi_multiple, parse_list, parse_number, parse_range


class TestParseNumber:
    """Tests for parse_number()."""

    @pytest.mark.parametrize(
        ("text", "expected"),
        [
            ("0.1", 0.1),
            ("1e-3", 1e-3),
            ("pi", math.pi),
            ("π/2", math.pi / 2),
            ("2pi/3", 2 * math.pi / 3),
            ("-pi/4", -math.pi / 4),
            ("sqrt(2)*pi", math.sqrt(2) * math.pi),
            ("pi/sqrt(2)", math.pi / math.sqrt(2)),
            ("3sqrt(2)", 3 * math.sqrt(2)),
            ("2(pi+1)", 2 * (math.pi + 1)),
            ("acos(-1/4)", math.acos(-0.25)),
            ("  tau ", math.tau),
        ],
    )
    def test_valid(self, text: str, expected: float) -> None:
        assert parse_number(text) == pytest.approx(expected)

    @pytest.mark.parametrize(
        "text", ["", "   ", "pi +", "1/0", "x", "True", "__import__('os')", "1e400", "sqrt(-1)"]
    )
    def test_invalid(self, text: str) -> None:
        with pytest.raises(ParseError):
            parse_number(text)


class TestParseList:
    """Tests for parse_list()."""

    def test_values(self) -> None:
        assert parse_list("0, 0.1, pi") == pytest.approx([0.0, 0.1, math.pi])

    def test_empty(self) -> None:
        assert parse_list("") == []

    def test_trailing_comma(self) -> None:
        assert parse_list("0.1,") == [0.1]


class TestParseRange:
    """Tests for parse_range()."""

    def test_valid(self) -> None:
        assert parse_range("-0.5:0.5:0.002") == (-0.5, 0.5, 0.002)

    def test_expressions(self) -> None:
        assert parse_range("-pi/8:pi/8:pi/80") == pytest.approx(
            (-math.pi / 8, math.pi / 8, math.pi / 80)
        )

    @pytest.mark.parametrize("text", ["0:1", "0:1:0.1:2", "0:1:0", "0:1:-0.1", "1:0:0.1"])
    def test_invalid(self, text: str) -> None:
        with pytest.raises(ParseError):
            parse_range(text)


class TestFormatPiMultiple:
    """Tests for format_pi_multiple()."""

    @pytest.mark.parametrize(
        ("value", "expected"),
        [
            (0.0, "0"),
            (math.pi, "π"),
            (-math.pi / 4, "-π/4"),
            (2 * math.pi / 3, "2π/3"),
            (6 * math.pi / 5, "6π/5"),
            (1.0, "0.31831π"),
        ],
    )
    def test_format(self, value: float, expected: str) -> None:
        assert format_pi_multiple(value) == expected
