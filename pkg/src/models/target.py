"""Ideal single-qubit gates a sequence is meant to realize."""

from __future__ import annotations

import math
from enum import StrEnum

import numpy as np
from pydantic import BaseModel, ConfigDict, model_validator

from src.physics.linalg import CMat


class GateKind(StrEnum):
    X = "x"
    HADAMARD = "hadamard"
    ROTATION = "rotation"
    PHASE = "phase"


class Alignment(StrEnum):
    """How the realized qubit block is compared with the target."""

    NONE = "none"
    GLOBAL_PHASE = "phase"


class GateTarget(BaseModel):
    """Target gate on the {|0⟩, |1⟩} block.

    Rotation(θ) uses the reflection form [[cos θ, sin θ], [sin θ, −cos θ]];
    Phase(η) is exp(iησ_z/2) = diag(e^{iη/2}, e^{−iη/2}).
    """

    model_config = ConfigDict(frozen=True)

    kind: GateKind
    angle: float | None = None

    @model_validator(mode="after")
    def validate_angle(self) -> GateTarget:
        """Rotation and phase targets need an angle, X and Hadamard take none."""
        needs_angle = self.kind in (GateKind.ROTATION, GateKind.PHASE)
        if needs_angle and self.angle is None:
            raise ValueError(f"{self.kind.value} target needs an angle")
        if not needs_angle and self.angle is not None:
            raise ValueError(f"{self.kind.value} target takes no angle")
        if self.angle is not None and not math.isfinite(self.angle):
            raise ValueError("Target angle must be finite")
        return self

    @classmethod
    def x(cls) -> GateTarget:
        return cls(kind=GateKind.X)

    @classmethod
    def hadamard(cls) -> GateTarget:
        return cls(kind=GateKind.HADAMARD)

    @classmethod
    def rotation(cls, theta: float) -> GateTarget:
        return cls(kind=GateKind.ROTATION, angle=theta)

    @classmethod
    def phase(cls, eta: float) -> GateTarget:
        return cls(kind=GateKind.PHASE, angle=eta)

    @property
    def qubit_matrix(self) -> CMat:
        m: list[list[complex]]
        match self.kind:
            case GateKind.X:
                m = [[0, 1], [1, 0]]
            case GateKind.HADAMARD:
                r = 1 / math.sqrt(2)
                m = [[r, r], [r, -r]]
            case GateKind.ROTATION:
                assert self.angle is not None
                c, s = math.cos(self.angle), math.sin(self.angle)
                m = [[c, s], [s, -c]]
            case GateKind.PHASE:
                assert self.angle is not None
                z = complex(math.cos(0.5 * self.angle), math.sin(0.5 * self.angle))
                m = [[z, 0], [0, z.conjugate()]]
        return np.array(m, dtype=np.complex128)

    def describe(self) -> str:
        if self.angle is None:
            return self.kind.value
        return f"{self.kind.value}({self.angle:.12g})"
