"""Tests for the sequence builders."""

import math

import numpy as np
import pytest

from src.catalog.phases import bb1, two_pi_cp
from src.catalog.sequences import (
    HADAMARD_COUPLINGS,
    X_COUPLINGS,
    XVariant,
    adiabatic_bb1_sequence,
    adiabatic_sequence,
    hadamard_sequence,
    phase_gate_sequence,
    rotation_sequence,
    sequence_delta,
    x_gate_sequence,
)
from src.errors import InvalidN, InvalidTheta, InvalidVariant
from src.models.error_model import ErrorModel
from src.models.sequence import Scheme
from src.models.shape import PulseShape
from src.models.target import Alignment, GateTarget
from src.physics.analytic import sequence_propagator
from src.physics.linalg import CMat, frobenius_dist
from src.physics.oracle import effective_propagator
from src.utils.analysis import infidelity


class TestXGateSequence:
    """Tests for x_gate_sequence()."""

    def test_resonant(self) -> None:
        seq = x_gate_sequence(3)
        assert seq.label == "X6"
        assert seq.scheme is Scheme.MS
        assert len(seq) == 6
        assert [p.phase0 for p in seq.pairs] == two_pi_cp(3)
        assert all(p.couplings == pytest.approx(X_COUPLINGS) for p in seq.pairs)
        assert seq.total_rms_area == pytest.approx(6 * math.pi)

    def test_small_detuning_shift(self) -> None:
        seq = x_gate_sequence(3, XVariant.small_detuning(0.3))
        assert seq.label == "X6-delta"
        assert [p.phase0 for p in seq.pairs] == pytest.approx(two_pi_cp(3, 0.3))

    def test_universal(self) -> None:
        seq = x_gate_sequence(5, XVariant.moderate_detuning(0.0))
        assert seq.label == "X10-universal"
        assert seq.pairs[1].phase0 == pytest.approx(5 * math.pi / 6)

    def test_majorana(self) -> None:
        seq = x_gate_sequence(5, XVariant.majorana())
        assert seq.scheme is Scheme.MAJORANA
        assert len(seq) == 5
        assert [p.phase0 for p in seq.pairs] == pytest.approx(bb1())
        assert all(p.phase1 == -p.phase0 for p in seq.pairs)
        assert seq.total_rms_area == pytest.approx(10 * math.pi)
        assert sum(p.area0 for p in seq.pairs) == pytest.approx(5 * math.sqrt(2) * math.pi)

    def test_large_detuning(self) -> None:
        seq = x_gate_sequence(5, XVariant.large_detuning())
        assert seq.label == "X-bb1-adiabatic"

    @pytest.mark.parametrize(
        "variant", [XVariant.majorana(), XVariant.moderate_detuning(0.0), XVariant.large_detuning()]
    )
    def test_five_only_variants(self, variant: XVariant) -> None:
        with pytest.raises(InvalidVariant):
            x_gate_sequence(3, variant)

    def test_invalid_order(self) -> None:
        with pytest.raises(InvalidN):
            x_gate_sequence(2)

    def test_shape_is_shared(self, gaussian: PulseShape) -> None:
        seq = x_gate_sequence(1, shape=gaussian)
        assert all(p.shape == gaussian for p in seq.pairs)


def _distance_up_to_phase(a: CMat, b: CMat) -> float:
    overlap = complex(np.trace(b.conj().T @ a))
    return frobenius_dist(a * (overlap.conjugate() / abs(overlap)), b)


class TestAdiabaticSequence:
    """Tests for adiabatic_sequence() and adiabatic_bb1_sequence()."""

    def test_design(self) -> None:
        seq = adiabatic_bb1_sequence()
        assert seq.label == "X-bb1-adiabatic"
        assert seq.scheme is Scheme.LAMBDA
        assert len(seq) == 5
        assert seq.detuning == pytest.approx(800 * math.pi)
        assert all(p.area0 == p.area1 == pytest.approx(40 * math.pi) for p in seq.pairs)
        assert all(p.phase1 == 0.0 for p in seq.pairs)
        assert [p.phase0 for p in seq.pairs] == pytest.approx(bb1())

    def test_half_pi_last_pulse(self) -> None:
        seq = adiabatic_bb1_sequence(math.pi / 2)
        assert seq.label.startswith("BB1-adiabatic-1.5707963")
        assert [p.phase0 for p in seq.pairs] == pytest.approx(bb1(math.pi / 2))
        legs = [p.area0 for p in seq.pairs]
        assert legs[:4] == pytest.approx([40 * math.pi] * 4)
        assert legs[4] == pytest.approx(40 * math.pi / math.sqrt(2))
        assert seq.detuning == pytest.approx(800 * math.pi)

    def test_invalid_theta(self) -> None:
        with pytest.raises(InvalidTheta):
            adiabatic_bb1_sequence(3 * math.pi)

    def test_default_label(self) -> None:
        assert adiabatic_sequence([math.pi], [0.0]).label == "adiabatic-1"

    @pytest.mark.parametrize("areas", [[math.pi], [math.pi, 0.0]])
    def test_rejects_bad_areas(self, areas: list[float]) -> None:
        with pytest.raises(ValueError):
            adiabatic_sequence(areas, [0.0, 0.0])

    def test_detuning_scales_with_duration(self) -> None:
        seq = adiabatic_bb1_sequence(shape=PulseShape.rectangular(2.0))
        assert seq.detuning == pytest.approx(400 * math.pi)

    @pytest.mark.parametrize("theta", [math.pi / 2, 2 * math.pi])
    def test_bb1_matches_single_pulse_at_zero_error(self, theta: float) -> None:
        bb1_u = effective_propagator(adiabatic_bb1_sequence(theta))
        single_u = effective_propagator(adiabatic_sequence([theta], [0.0]))
        assert _distance_up_to_phase(bb1_u, single_u) < 1e-10

    @pytest.mark.parametrize("theta", [math.pi / 2, 2 * math.pi])
    @pytest.mark.parametrize("epsilon", [-0.05, -0.02, 0.02, 0.05])
    def test_bb1_flatter_than_single_pulse(self, theta: float, epsilon: float) -> None:
        em = ErrorModel(epsilon=epsilon)
        drift = {}
        for name, seq in (
            ("bb1", adiabatic_bb1_sequence(theta)),
            ("single", adiabatic_sequence([theta], [0.0])),
        ):
            drift[name] = _distance_up_to_phase(
                effective_propagator(seq, em), effective_propagator(seq)
            )
        assert drift["bb1"] < 0.5 * drift["single"]


class TestGateFamilies:
    """Tests for the Hadamard, rotation and phase-gate builders."""

    @pytest.mark.parametrize("n", [1, 3])
    def test_hadamard_is_minus_h(self, n: int) -> None:
        seq = hadamard_sequence(n)
        assert seq.label == f"H{2 * n}"
        u = sequence_propagator(seq)
        h = GateTarget.hadamard().qubit_matrix
        np.testing.assert_allclose(u[:2, :2], -h, atol=1e-12)
        assert abs(u[2, 2]) == pytest.approx(1.0)

    def test_hadamard_small_detuning(self) -> None:
        seq = hadamard_sequence(3, variant=XVariant.small_detuning(0.3))
        assert seq.label == "H6-delta"
        assert [p.phase0 for p in seq.pairs] == pytest.approx(two_pi_cp(3, 0.3))
        assert all(p.couplings == pytest.approx(HADAMARD_COUPLINGS) for p in seq.pairs)

    def test_hadamard_universal(self) -> None:
        seq = hadamard_sequence(5, variant=XVariant.moderate_detuning(0.0))
        assert seq.label == "H10-universal"
        assert seq.pairs[2].phase0 == pytest.approx(math.pi / 3)

    @pytest.mark.parametrize(
        ("n", "variant"),
        [
            (5, XVariant.majorana()),
            (5, XVariant.large_detuning()),
            (3, XVariant.moderate_detuning(0.0)),
        ],
    )
    def test_hadamard_without_construction(self, n: int, variant: XVariant) -> None:
        with pytest.raises(InvalidVariant):
            hadamard_sequence(n, variant=variant)

    def test_rotation_couplings(self) -> None:
        theta = math.pi / 3
        seq = rotation_sequence(3, theta)
        assert seq.label.startswith("ROT-3-1.0471975")
        assert seq.pairs[0].couplings == pytest.approx((math.sin(theta / 2), -math.cos(theta / 2)))
        d = infidelity(sequence_propagator(seq), GateTarget.rotation(theta))
        assert d < 1e-12

    @pytest.mark.parametrize("eta", [math.pi / 8, math.pi / 4, 1.0])
    def test_phase_gate_realizes_double_phase(self, eta: float) -> None:
        seq = phase_gate_sequence(3, eta)
        assert seq.scheme is Scheme.MAJORANA
        assert len(seq) == 6
        d = infidelity(sequence_propagator(seq), GateTarget.phase(2 * eta), Alignment.GLOBAL_PHASE)
        assert d < 1e-12


class TestSequenceDelta:
    """Tests for sequence_delta()."""

    def test_x6(self) -> None:
        assert sequence_delta(x_gate_sequence(3), 0.1) == pytest.approx(0.3)

    def test_zero_detuning(self) -> None:
        assert sequence_delta(x_gate_sequence(5), 0.0) == 0.0
