"""Tests for the catalog, propagate, oracle-check and order reports."""

import math

import pytest

from src.catalog.registry import resolve
from src.components.common import Status, parse_shape
from src.components.reports import (
    cmd_catalog,
    cmd_oracle_check,
    cmd_order,
    cmd_propagate,
    format_area,
)
from src.errors import DegenerateCurve
from src.physics.oracle import IntegratorConfig
from src.utils.analysis import Engine


class TestFormatArea:
    """Tests for format_area()."""

    @pytest.mark.parametrize(
        ("value", "expected"),
        [
            (math.pi, "π"),
            (10 * math.pi, "10π"),
            (40 * math.pi, "40π"),
            (math.sqrt(2) * math.pi, "√2π"),
            (5 * math.sqrt(2) * math.pi, "5√2π"),
            (math.pi / math.sqrt(2), "π/√2"),
            (-math.pi / math.sqrt(2), "-π/√2"),
            (0.3, "0.095493π"),
        ],
    )
    def test_format(self, value: float, expected: str) -> None:
        assert format_area(value) == expected


class TestCmdCatalog:
    """Tests for cmd_catalog()."""

    def test_lists_every_entry(self) -> None:
        result = cmd_catalog()
        assert result.fields["entries"] == "17"
        assert result.status is Status.PASS
        assert sum(line.startswith("X6 ") for line in result.lines) == 1

    def test_majorana_areas(self) -> None:
        result = cmd_catalog(name_filter="majorana")
        assert "total_rms_area=10π" in result.lines[0]
        assert "total_leg_area=5√2π" in result.lines[0]
        assert any("phase1:" in line for line in result.lines)

    def test_adiabatic_detuning(self) -> None:
        result = cmd_catalog(name_filter="adiabatic")
        assert any(line.strip().startswith("detuning: 2513.27") for line in result.lines)

    def test_no_match(self) -> None:
        result = cmd_catalog(name_filter="zzz")
        assert result.fields["entries"] == "0"
        assert result.lines == ["No catalog label matches 'zzz'"]

    def test_shape(self) -> None:
        result = cmd_catalog(name_filter="X2", shape=parse_shape("gaussian"))
        assert result.fields["entries"] == "1"


class TestCmdPropagate:
    """Tests for cmd_propagate()."""

    def test_exact_gate(self) -> None:
        result = cmd_propagate(resolve("X6"))
        assert float(result.fields["D"]) < 1e-12
        assert "Re U =" in result.lines

    def test_area_error(self) -> None:
        result = cmd_propagate(resolve("X2"), epsilon=0.1)
        assert float(result.fields["D"]) == pytest.approx(0.0489435, abs=1e-6)
        assert result.lines[-1].startswith("D = 0.04894348")

    def test_oracle_engine(self, fast_oracle: IntegratorConfig) -> None:
        result = cmd_propagate(resolve("X2"), delta_t=0.1, engine=Engine.ORACLE, cfg=fast_oracle)
        assert result.fields["engine"] == "oracle"
        assert float(result.fields["unitarity_defect"]) < 1e-7


class TestCmdOracleCheck:
    """Tests for cmd_oracle_check()."""

    def test_pass(self) -> None:
        result = cmd_oracle_check(resolve("X2"), epsilon=0.1, delta_t=0.1)
        assert result.status is Status.PASS
        assert float(result.fields["residual"]) < 1e-8

    def test_fail_at_tight_tolerance(self, fast_oracle: IntegratorConfig) -> None:
        result = cmd_oracle_check(resolve("X2"), epsilon=0.1, cfg=fast_oracle, tolerance=1e-30)
        assert result.status is Status.FAIL
        assert result.exit_code == 1

    def test_shaped_detuned_is_oracle_only(self, fast_oracle: IntegratorConfig) -> None:
        entry = resolve("X2", shape=parse_shape("gaussian"))
        result = cmd_oracle_check(entry, delta_t=0.1, cfg=fast_oracle)
        assert result.status is Status.PASS
        assert result.fields["check"] == "oracle-only"
        assert "analytic path unavailable; oracle-only" in result.lines


class TestCmdOrder:
    """Tests for cmd_order()."""

    def test_catalog_order(self) -> None:
        result = cmd_order(resolve("X6"))
        assert result.status is Status.PASS
        assert result.fields["expected"] == "6"
        assert float(result.fields["slope"]) == pytest.approx(6.0, rel=0.05)

    def test_wrong_expected_order(self) -> None:
        assert cmd_order(resolve("X6"), expected_n=5).status is Status.FAIL

    def test_without_order(self) -> None:
        result = cmd_order(resolve("F6"))
        assert result.status is Status.PASS
        assert "expected" not in result.fields
        assert "slope reported only" in result.lines[-1]

    def test_degenerate(self, monkeypatch: pytest.MonkeyPatch) -> None:
        def flat(*args: object, **kwargs: object) -> float:
            raise DegenerateCurve("flat")

        monkeypatch.setattr("src.components.reports.robustness_order", flat)
        result = cmd_order(resolve("X6"))
        assert result.status is Status.FAIL
        assert result.lines == ["flat"]
