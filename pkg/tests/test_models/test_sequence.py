"""Tests for CompositeSequence, scheme checks and the error transform."""

import math

import pytest
from pydantic import ValidationError

from src.errors import InvalidEpsilon, SchemeViolation
from src.models.error_model import ErrorModel
from src.models.pulse_pair import PulsePair
from src.models.sequence import CompositeSequence, Scheme, apply_error, check_pair, same_angle


def _majorana_pair(phi: float = 0.4, **overrides: float) -> PulsePair:
    """Valid Majorana pair with optional overrides."""
    data: dict = {"area0": math.sqrt(2) * math.pi, "area1": math.sqrt(2) * math.pi}
    data.update({"phase0": phi, "phase1": -phi})
    data.update(overrides)
    return PulsePair(**data)


class TestSameAngle:
    """Tests for same_angle()."""

    def test_modulo_two_pi(self) -> None:
        assert same_angle(0.1, 0.1 + 2 * math.pi)
        assert same_angle(-math.pi, math.pi)

    def test_different(self) -> None:
        assert not same_angle(0.0, 1e-6)


class TestCheckPair:
    """Tests for check_pair()."""

    def test_ms_needs_equal_phases(self) -> None:
        pair = PulsePair(area0=1.0, area1=1.0, phase0=0.0, phase1=0.5)
        with pytest.raises(SchemeViolation, match="φ₀ = φ₁"):
            check_pair(pair, Scheme.MS, 3)

    def test_lambda_accepts_any_phases(self) -> None:
        check_pair(PulsePair(area0=1.0, area1=2.0, phase0=0.0, phase1=0.5), Scheme.LAMBDA)

    def test_majorana_valid(self) -> None:
        check_pair(_majorana_pair(), Scheme.MAJORANA)

    def test_majorana_unequal_areas(self) -> None:
        with pytest.raises(SchemeViolation, match="A₀"):
            check_pair(_majorana_pair(area1=1.0), Scheme.MAJORANA)

    def test_majorana_phases_must_be_opposite(self) -> None:
        with pytest.raises(SchemeViolation, match="φ₁ = −φ₀"):
            check_pair(_majorana_pair(phase1=0.4), Scheme.MAJORANA)

    def test_majorana_signed_areas_allowed(self) -> None:
        check_pair(_majorana_pair(area1=-math.sqrt(2) * math.pi), Scheme.MAJORANA)


class TestCompositeSequence:
    """Tests for the CompositeSequence model."""

    def test_validates_scheme_on_construction(self) -> None:
        pair = PulsePair(area0=1.0, area1=1.0, phase0=0.0, phase1=0.5)
        with pytest.raises(ValidationError, match="φ₀ = φ₁"):
            CompositeSequence(pairs=(pair,), scheme=Scheme.MS)

    def test_needs_a_pair(self) -> None:
        with pytest.raises(ValidationError):
            CompositeSequence(pairs=())

    def test_totals(self, x_pair: PulsePair) -> None:
        seq = CompositeSequence(pairs=(x_pair, x_pair, x_pair))
        assert len(seq) == 3
        assert seq.total_rms_area == pytest.approx(3 * math.pi)
        assert seq.duration == pytest.approx(3.0)
        assert seq.all_rectangular


class TestApplyError:
    """Tests for apply_error()."""

    def test_null_model_returns_same_sequence(self, x_pair: PulsePair) -> None:
        seq = CompositeSequence(pairs=(x_pair,), label="s")
        assert apply_error(seq, ErrorModel()) is seq

    def test_scales_areas_and_adds_detuning(self, x_pair: PulsePair) -> None:
        seq = CompositeSequence(pairs=(x_pair,), label="s", detuning=2.0)
        out = apply_error(seq, ErrorModel(epsilon=0.1, detuning=0.5))
        assert out.pairs[0].area0 == pytest.approx(1.1 * x_pair.area0)
        assert out.pairs[0].area1 == pytest.approx(1.1 * x_pair.area1)
        assert out.detuning == pytest.approx(2.5)
        assert out.label == "s[eps=0.1,delta=0.5]"

    def test_input_untouched(self, x_pair: PulsePair) -> None:
        seq = CompositeSequence(pairs=(x_pair,))
        apply_error(seq, ErrorModel(epsilon=0.2))
        assert seq.pairs[0] == x_pair

    def test_composes_multiplicatively(self, x_pair: PulsePair) -> None:
        seq = CompositeSequence(pairs=(x_pair,), detuning=0.1)
        twice = apply_error(
            apply_error(seq, ErrorModel(epsilon=0.1, detuning=0.2)),
            ErrorModel(epsilon=-0.3, detuning=0.4),
        )
        once = apply_error(seq, ErrorModel(epsilon=1.1 * 0.7 - 1.0, detuning=0.6))
        assert twice.pairs[0].area0 == pytest.approx(once.pairs[0].area0)
        assert twice.pairs[0].area1 == pytest.approx(once.pairs[0].area1)
        assert twice.pairs[0].area0 == pytest.approx(0.77 * x_pair.area0)
        assert twice.detuning == pytest.approx(once.detuning)

    @pytest.mark.parametrize("epsilon", [-1.0, -1.5])
    def test_rejects_epsilon_at_or_below_minus_one(self, x_pair: PulsePair, epsilon: float) -> None:
        seq = CompositeSequence(pairs=(x_pair,))
        with pytest.raises(InvalidEpsilon, match="must exceed"):
            apply_error(seq, ErrorModel(epsilon=epsilon))

    def test_error_model_rejects_nan(self) -> None:
        with pytest.raises(ValidationError):
            ErrorModel(epsilon=float("nan"))
