"""One simultaneous pair of Raman pulses."""

from __future__ import annotations

import math
from typing import Annotated

from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.errors import ZeroCoupling
from src.models.shape import PulseShape

_Finite = Annotated[float, Field(allow_inf_nan=False)]


class PulsePair(BaseModel):
    """Two Raman legs sharing one envelope.

    ``area0``/``area1`` are signed pulse areas in radians; the sign is the sign of the coupling
    ξ_k and is never folded into a π phase shift.
    """

    model_config = ConfigDict(frozen=True)

    area0: _Finite
    area1: _Finite
    phase0: _Finite = 0.0
    phase1: _Finite = 0.0
    shape: PulseShape = Field(default_factory=PulseShape.rectangular)

    @model_validator(mode="after")
    def validate_rms_area(self) -> PulsePair:
        """Ensure at least one leg is on."""
        if self.rms_area <= 0.0:
            raise ValueError("RMS pulse area must be positive")
        return self

    @property
    def rms_area(self) -> float:
        return math.hypot(self.area0, self.area1)

    @property
    def couplings(self) -> tuple[float, float]:
        """Signed coupling amplitudes (ξ₀, ξ₁) = (A₀/π, A₁/π)."""
        return self.area0 / math.pi, self.area1 / math.pi

    @property
    def duration(self) -> float:
        return self.shape.duration

    def scaled(self, factor: float) -> PulsePair:
        return self.model_copy(update={"area0": self.area0 * factor, "area1": self.area1 * factor})

    def with_shape(self, shape: PulseShape) -> PulsePair:
        return self.model_copy(update={"shape": shape.normalize()})


def pair_from_couplings(
    xi0: float, xi1: float, phase: float, shape: PulseShape | None = None
) -> PulsePair:
    """Build an MS-convention pair (both legs share ``phase``) from coupling amplitudes.

    Raises:
        ZeroCoupling: If both couplings vanish.
    """
    if xi0 == 0.0 and xi1 == 0.0:
        raise ZeroCoupling("At least one of ξ₀, ξ₁ must be nonzero")
    return PulsePair(
        area0=xi0 * math.pi,
        area1=xi1 * math.pi,
        phase0=phase,
        phase1=phase,
        shape=(shape or PulseShape.rectangular()).normalize(),
    )


def delta_phase(pair: PulsePair, detuning: float) -> float:
    """δ = Δ·T/2 accumulated by the bright/excited block over one pair."""
    return 0.5 * detuning * pair.duration
