"""Tests for GateTarget."""

import cmath
import math

import numpy as np
import pytest
from pydantic import ValidationError

from src.models.target import GateKind, GateTarget
from src.physics.linalg import unitarity_defect


class TestQubitMatrix:
    """Tests for GateTarget.qubit_matrix."""

    def test_x(self) -> None:
        np.testing.assert_array_equal(GateTarget.x().qubit_matrix, [[0, 1], [1, 0]])

    def test_hadamard(self) -> None:
        r = 1 / math.sqrt(2)
        np.testing.assert_allclose(GateTarget.hadamard().qubit_matrix, [[r, r], [r, -r]])

    def test_rotation_is_reflection_form(self) -> None:
        c, s = math.cos(1.0), math.sin(1.0)
        np.testing.assert_allclose(GateTarget.rotation(1.0).qubit_matrix, [[c, s], [s, -c]])

    def test_rotation_pi_is_x(self) -> None:
        np.testing.assert_allclose(
            GateTarget.rotation(math.pi / 2).qubit_matrix, [[0, 1], [1, 0]], atol=1e-15
        )

    def test_phase_half_angle(self) -> None:
        m = GateTarget.phase(math.pi / 4).qubit_matrix
        np.testing.assert_allclose(
            m, np.diag([cmath.exp(1j * math.pi / 8), cmath.exp(-1j * math.pi / 8)])
        )

    @pytest.mark.parametrize(
        "target",
        [
            GateTarget.x(),
            GateTarget.hadamard(),
            GateTarget.rotation(0.7),
            GateTarget.phase(2.1),
        ],
    )
    def test_unitary(self, target: GateTarget) -> None:
        assert unitarity_defect(target.qubit_matrix) < 1e-12


class TestValidation:
    """Tests for GateTarget angle validation."""

    def test_rotation_needs_angle(self) -> None:
        with pytest.raises(ValidationError, match="needs an angle"):
            GateTarget(kind=GateKind.ROTATION)

    def test_x_takes_no_angle(self) -> None:
        with pytest.raises(ValidationError, match="takes no angle"):
            GateTarget(kind=GateKind.X, angle=1.0)

    def test_infinite_angle(self) -> None:
        with pytest.raises(ValidationError):
            GateTarget.phase(float("inf"))

    def test_describe(self) -> None:
        assert GateTarget.x().describe() == "x"
        assert GateTarget.phase(0.5).describe() == "phase(0.5)"
