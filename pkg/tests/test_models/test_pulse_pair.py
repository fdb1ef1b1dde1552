"""Tests for PulsePair and its helpers."""

import math

import pytest
from pydantic import ValidationError

from src.errors import ZeroCoupling
from src.models.pulse_pair import PulsePair, delta_phase, pair_from_couplings
from src.models.shape import PulseShape


class TestPulsePair:
    """Tests for the PulsePair model."""

    def test_rms_area_and_couplings(self, x_pair: PulsePair) -> None:
        assert x_pair.rms_area == pytest.approx(math.pi)
        xi0, xi1 = x_pair.couplings
        assert xi0 == pytest.approx(1 / math.sqrt(2))
        assert xi1 == pytest.approx(-1 / math.sqrt(2))

    def test_sign_kept_on_area(self, x_pair: PulsePair) -> None:
        assert x_pair.area1 < 0
        assert x_pair.phase1 == 0.0

    def test_zero_area_rejected(self) -> None:
        with pytest.raises(ValidationError, match="RMS pulse area must be positive"):
            PulsePair(area0=0.0, area1=0.0)

    def test_nan_rejected(self) -> None:
        with pytest.raises(ValidationError):
            PulsePair(area0=float("nan"), area1=1.0)

    def test_scaled(self, x_pair: PulsePair) -> None:
        scaled = x_pair.scaled(1.1)
        assert scaled.rms_area == pytest.approx(1.1 * math.pi)
        assert scaled.shape == x_pair.shape

    def test_frozen(self, x_pair: PulsePair) -> None:
        with pytest.raises(ValidationError):
            x_pair.area0 = 1.0  # type: ignore[misc]

    def test_with_shape(self, x_pair: PulsePair) -> None:
        shaped = x_pair.with_shape(PulseShape(kind="gaussian"))
        assert shaped.shape.scale is not None
        assert shaped.area0 == x_pair.area0


class TestPairFromCouplings:
    """Tests for pair_from_couplings()."""

    def test_areas_are_pi_times_couplings(self) -> None:
        pair = pair_from_couplings(0.6, 0.8, 0.3)
        assert pair.area0 == pytest.approx(0.6 * math.pi)
        assert pair.area1 == pytest.approx(0.8 * math.pi)
        assert pair.phase0 == pair.phase1 == 0.3

    def test_zero_coupling_raises(self) -> None:
        with pytest.raises(ZeroCoupling):
            pair_from_couplings(0.0, 0.0, 0.0)

    def test_default_shape_is_rectangular(self) -> None:
        assert pair_from_couplings(1.0, 0.0, 0.0).shape.is_rectangular


class TestDeltaPhase:
    """Tests for delta_phase()."""

    def test_half_detuning_times_duration(self) -> None:
        pair = pair_from_couplings(1.0, 0.0, 0.0, PulseShape.rectangular(2.0))
        assert delta_phase(pair, 0.3) == pytest.approx(0.3)
