"""Pydantic models for the JSON sequence interchange file.

Example::

    {
      "label": "my-x",
      "scheme": "ms",
      "shape": {"kind": "rectangular", "duration": 1},
      "pairs": [{"area0": "pi/sqrt(2)", "area1": "-pi/sqrt(2)", "phase0": 0, "phase1": 0}],
      "target": {"kind": "x"}
    }

Every angle may be a number (radians) or a ``pi`` expression string.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Annotated, Any

from pydantic import BaseModel, Field, ValidationError, field_validator

from src.errors import ParseError
from src.models.pulse_pair import PulsePair
from src.models.sequence import CompositeSequence, Scheme
from src.models.shape import PulseShape, ShapeKind
from src.models.target import Alignment, GateKind, GateTarget
from src.utils.expressions import parse_number


def _coerce_number(v: Any) -> Any:
    if isinstance(v, str):
        return parse_number(v)
    return v


class ShapeData(BaseModel):
    """Validated ``shape`` block."""

    kind: ShapeKind = ShapeKind.RECTANGULAR
    duration: Annotated[float, Field(gt=0)] = 1.0
    width: float | None = None

    @field_validator("kind", mode="before")
    @classmethod
    def lower_kind(cls, v: Any) -> Any:
        """Accept any capitalization of the shape name."""
        return v.strip().lower() if isinstance(v, str) else v

    @field_validator("duration", "width", mode="before")
    @classmethod
    def evaluate_numbers(cls, v: Any) -> Any:
        return _coerce_number(v)

    def to_shape(self) -> PulseShape:
        return PulseShape(kind=self.kind, duration=self.duration, width=self.width).normalize()


class PairData(BaseModel):
    """One ``pairs`` entry; angles in radians."""

    area0: float
    area1: float
    phase0: float = 0.0
    phase1: float = 0.0

    @field_validator("area0", "area1", "phase0", "phase1", mode="before")
    @classmethod
    def evaluate_angles(cls, v: Any) -> Any:
        """Evaluate ``pi`` expressions."""
        return _coerce_number(v)


class TargetData(BaseModel):
    kind: GateKind
    angle: float | None = None

    @field_validator("kind", mode="before")
    @classmethod
    def lower_kind(cls, v: Any) -> Any:
        return v.strip().lower() if isinstance(v, str) else v

    @field_validator("angle", mode="before")
    @classmethod
    def evaluate_angle(cls, v: Any) -> Any:
        return _coerce_number(v)


class SequenceFile(BaseModel):
    """Validated sequence interchange document."""

    label: str = "custom"
    scheme: Scheme = Scheme.MS
    shape: ShapeData = Field(default_factory=ShapeData)
    pairs: Annotated[list[PairData], Field(min_length=1)]
    detuning: float = 0.0
    target: TargetData | None = None
    alignment: Alignment | None = None

    @field_validator("label", mode="before")
    @classmethod
    def strip_label(cls, v: Any) -> Any:
        """Strip whitespace from the label."""
        return v.strip() if isinstance(v, str) else v

    @field_validator("scheme", mode="before")
    @classmethod
    def lower_scheme(cls, v: Any) -> Any:
        return v.strip().lower() if isinstance(v, str) else v

    @field_validator("detuning", mode="before")
    @classmethod
    def evaluate_detuning(cls, v: Any) -> Any:
        return _coerce_number(v)

    def to_sequence(self) -> CompositeSequence:
        shape = self.shape.to_shape()
        pairs = tuple(PulsePair(**p.model_dump(), shape=shape) for p in self.pairs)
        return CompositeSequence(
            pairs=pairs, scheme=self.scheme, label=self.label, detuning=self.detuning
        )

    def to_target(self) -> GateTarget | None:
        if self.target is None:
            return None
        return GateTarget(kind=self.target.kind, angle=self.target.angle)

    @classmethod
    def from_sequence(
        cls,
        seq: CompositeSequence,
        target: GateTarget | None = None,
        alignment: Alignment | None = None,
    ) -> SequenceFile:
        """Export a sequence whose pairs share one shape."""
        shape = seq.pairs[0].shape
        return cls(
            label=seq.label,
            scheme=seq.scheme,
            shape=ShapeData(kind=shape.kind, duration=shape.duration, width=shape.width),
            pairs=[
                PairData(area0=p.area0, area1=p.area1, phase0=p.phase0, phase1=p.phase1)
                for p in seq.pairs
            ],
            detuning=seq.detuning,
            target=None if target is None else TargetData(kind=target.kind, angle=target.angle),
            alignment=alignment,
        )


def load_sequence_file(path: Path) -> SequenceFile:
    """Read and validate a sequence file.

    Raises:
        ParseError: If the file is not JSON or does not describe a valid sequence.
    """
    try:
        raw = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: not valid JSON ({exc})") from exc
    try:
        doc = SequenceFile.model_validate(raw)
        doc.to_sequence()
    except ValidationError as exc:
        raise ParseError(f"{path}: invalid sequence file\n{exc}") from exc
    return doc
