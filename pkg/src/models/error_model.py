"""Systematic experimental errors applied to a whole sequence."""

from __future__ import annotations

from typing import Annotated

from pydantic import BaseModel, ConfigDict, Field


class ErrorModel(BaseModel):
    """Shared pulse-area error ε and constant detuning Δ.

    ε multiplies every leg area by (1+ε); ``apply_error`` rejects ε ≤ −1 with InvalidEpsilon.
    Δ is single-photon (on |2⟩) for MS/Λ pairs and the two-photon ±Δ splitting for Majorana
    pairs.
    """

    model_config = ConfigDict(frozen=True)

    epsilon: Annotated[float, Field(allow_inf_nan=False)] = 0.0
    detuning: Annotated[float, Field(allow_inf_nan=False)] = 0.0

    @property
    def is_null(self) -> bool:
        return self.epsilon == 0.0 and self.detuning == 0.0
