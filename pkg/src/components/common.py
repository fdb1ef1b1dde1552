"""Pieces shared by every command: input resolution and the result/summary record."""

from __future__ import annotations

import logging
from enum import StrEnum
from pathlib import Path

import numpy as np
from pydantic import BaseModel, Field

from src.catalog.registry import CatalogEntry, resolve
from src.errors import ParseError
from src.models.shape import PulseShape
from src.models.target import Alignment, GateTarget
from src.physics.linalg import CMat
from src.utils.expressions import parse_number
from src.utils.validators import load_sequence_file

logger = logging.getLogger(__name__)

_DISPLAY_ZERO = 1e-15


class Status(StrEnum):
    PASS = "pass"
    FAIL = "fail"
    ERROR = "error"


class CommandResult(BaseModel):
    """Printed output of one command plus the fields of its summary line."""

    command: str
    status: Status = Status.PASS
    lines: list[str] = Field(default_factory=list)
    fields: dict[str, str] = Field(default_factory=dict)

    @property
    def exit_code(self) -> int:
        return {Status.PASS: 0, Status.FAIL: 1, Status.ERROR: 2}[self.status]

    def summary_line(self) -> str:
        parts = [f"command={self.command}", f"status={self.status.value}"]
        parts += [f"{key}={value}" for key, value in self.fields.items()]
        return "SUMMARY " + " ".join(parts)

    def render(self) -> str:
        return "\n".join([*self.lines, self.summary_line()]) + "\n"


def parse_gate(text: str) -> GateTarget:
    """Parse ``x``, ``hadamard``, ``rotation:<θ>`` or ``phase:<η>``.

    Raises:
        ParseError: For any other form.
    """
    kind, _, arg = text.strip().lower().partition(":")
    match kind:
        case "x" if not arg:
            return GateTarget.x()
        case "h" | "hadamard" if not arg:
            return GateTarget.hadamard()
        case "rot" | "rotation" if arg:
            return GateTarget.rotation(parse_number(arg))
        case "phase" if arg:
            return GateTarget.phase(parse_number(arg))
    raise ParseError(f"Unknown gate '{text}': use x, hadamard, rotation:<θ> or phase:<η>")


def parse_shape(text: str, duration: float = 1.0) -> PulseShape:
    """Parse ``rectangular``, ``gaussian`` or ``gaussian:<width>`` (width in units of T)."""
    kind, _, arg = text.strip().lower().partition(":")
    if kind in ("rect", "rectangular") and not arg:
        return PulseShape.rectangular(duration)
    if kind == "gaussian":
        if not arg:
            return PulseShape.gaussian(duration)
        return PulseShape.gaussian(duration, parse_number(arg))
    raise ParseError(f"Unknown shape '{text}': use rectangular, gaussian or gaussian:<width>")


def load_entry(
    sequence: str,
    *,
    gate: str | None = None,
    align: Alignment | None = None,
    delta_t: float = 0.0,
    eta: float | None = None,
    shape: PulseShape | None = None,
) -> CatalogEntry:
    """Resolve ``--sequence`` (catalog label or ``.json`` sequence file) and its target.

    ``gate`` and ``align`` override the catalog or file defaults.

    Raises:
        UnknownLabel: If the label is not in the catalog.
        ParseError: If the file is invalid or no target gate is known.
    """
    path = Path(sequence)
    if path.suffix.lower() == ".json" or path.is_file():
        if shape is not None:
            logger.warning("--shape is ignored for sequence files; the file sets the shape")
        doc = load_sequence_file(path)
        target = parse_gate(gate) if gate else doc.to_target()
        if target is None:
            raise ParseError(f"{path}: no target gate in the file, pass --gate")
        return CatalogEntry(
            label=doc.label,
            sequence=doc.to_sequence(),
            target=target,
            alignment=align or doc.alignment or Alignment.NONE,
        )

    entry = resolve(sequence, delta_t=delta_t, eta=eta, shape=shape)
    update: dict[str, object] = {}
    if gate:
        update["target"] = parse_gate(gate)
    if align is not None:
        update["alignment"] = align
    return entry.model_copy(update=update) if update else entry


def format_matrix(u: CMat) -> list[str]:
    """Real and imaginary parts, 12 significant digits, sub-1e-15 entries shown as 0."""
    shown = np.where(np.abs(u.real) < _DISPLAY_ZERO, 0.0, u.real) + 0.0
    shown_im = np.where(np.abs(u.imag) < _DISPLAY_ZERO, 0.0, u.imag) + 0.0
    lines = ["Re U ="]
    lines += ["  " + " ".join(f"{x:>+20.12g}" for x in row) for row in shown]
    lines.append("Im U =")
    lines += ["  " + " ".join(f"{x:>+20.12g}" for x in row) for row in shown_im]
    return lines
