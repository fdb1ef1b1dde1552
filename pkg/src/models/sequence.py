"""Composite sequences of Raman pulse pairs and the error transform applied to them."""

from __future__ import annotations

import logging
import math
from enum import StrEnum
from typing import Annotated

from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.errors import InvalidEpsilon, SchemeViolation
from src.models.error_model import ErrorModel
from src.models.pulse_pair import PulsePair

logger = logging.getLogger(__name__)

_ANGLE_TOL = 1e-12


class Scheme(StrEnum):
    """Coupling scheme of every pair in a sequence.

    MS: both legs share one phase, single-photon detuning on |2⟩.
    MAJORANA: equal |areas|, opposite phases, two-photon ±Δ splitting.
    LAMBDA: independent leg phases, single-photon detuning on |2⟩.
    """

    MS = "ms"
    MAJORANA = "majorana"
    LAMBDA = "lambda"


def same_angle(a: float, b: float, tol: float = _ANGLE_TOL) -> bool:
    """Equality of two angles modulo 2π."""
    d = math.remainder(a - b, 2.0 * math.pi)
    return abs(d) <= tol * max(1.0, abs(a), abs(b))


def check_pair(pair: PulsePair, scheme: Scheme, index: int = 0) -> None:
    """Raise SchemeViolation if ``pair`` breaks the constraints of ``scheme``."""
    if scheme is Scheme.MS and not same_angle(pair.phase0, pair.phase1):
        raise SchemeViolation(
            f"Pair {index}: MS pairs need φ₀ = φ₁, got {pair.phase0!r} and {pair.phase1!r}"
        )
    if scheme is Scheme.MAJORANA:
        scale = max(abs(pair.area0), abs(pair.area1))
        if abs(abs(pair.area0) - abs(pair.area1)) > _ANGLE_TOL * scale:
            raise SchemeViolation(
                f"Pair {index}: Majorana pairs need |A₀| = |A₁|, "
                f"got {pair.area0!r} and {pair.area1!r}"
            )
        if not same_angle(pair.phase1, -pair.phase0):
            raise SchemeViolation(
                f"Pair {index}: Majorana pairs need φ₁ = −φ₀, "
                f"got {pair.phase0!r} and {pair.phase1!r}"
            )


class CompositeSequence(BaseModel):
    """Ordered pulse pairs, applied first-to-last.

    ``detuning`` is a built-in design detuning (radians per unit time) that adds to the error
    model's detuning during propagation.
    """

    model_config = ConfigDict(frozen=True)

    pairs: Annotated[tuple[PulsePair, ...], Field(min_length=1)]
    scheme: Scheme = Scheme.MS
    label: str = ""
    detuning: Annotated[float, Field(allow_inf_nan=False)] = 0.0

    @model_validator(mode="after")
    def validate_scheme(self) -> CompositeSequence:
        """Ensure every pair satisfies the scheme constraints."""
        self.check_scheme()
        return self

    def check_scheme(self) -> None:
        for i, pair in enumerate(self.pairs):
            check_pair(pair, self.scheme, i)

    def __len__(self) -> int:
        return len(self.pairs)

    @property
    def total_rms_area(self) -> float:
        return sum(p.rms_area for p in self.pairs)

    @property
    def duration(self) -> float:
        return sum(p.duration for p in self.pairs)

    @property
    def all_rectangular(self) -> bool:
        return all(p.shape.is_rectangular for p in self.pairs)


def apply_error(seq: CompositeSequence, em: ErrorModel) -> CompositeSequence:
    """Scale every leg area by (1+ε) and fold the error detuning into the sequence.

    Raises:
        InvalidEpsilon: If ε ≤ −1.
    """
    if not em.epsilon > -1.0:
        raise InvalidEpsilon(f"Pulse-area error must exceed −1, got {em.epsilon}")
    if em.is_null:
        return seq

    factor = 1.0 + em.epsilon
    tag = f"eps={em.epsilon:g}" + (f",delta={em.detuning:g}" if em.detuning else "")
    label = f"{seq.label}[{tag}]" if seq.label else f"[{tag}]"
    logger.debug("Applying error model to %s: factor=%r, Δ+=%r", seq.label, factor, em.detuning)
    return seq.model_copy(
        update={
            "pairs": tuple(p.scaled(factor) for p in seq.pairs),
            "detuning": seq.detuning + em.detuning,
            "label": label,
        }
    )
