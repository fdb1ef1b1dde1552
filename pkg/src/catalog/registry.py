"""Named catalog entries: label → sequence, target gate and default alignment."""

from __future__ import annotations

import logging
import math
import re

from pydantic import BaseModel, ConfigDict

from src.catalog.sequences import (
    XVariant,
    adiabatic_bb1_sequence,
    adiabatic_sequence,
    hadamard_sequence,
    phase_gate_sequence,
    rotation_sequence,
    sequence_delta,
    x_gate_sequence,
)
from src.errors import InvalidN, ParseError, UnknownLabel
from src.models.sequence import CompositeSequence
from src.models.shape import PulseShape
from src.models.target import Alignment, GateTarget
from src.utils.expressions import parse_angle

logger = logging.getLogger(__name__)

DEFAULT_ETA = math.pi / 4
T_GATE_ETA = math.pi / 8

CATALOG_LABELS = (
    "X2",
    "X6",
    "X10",
    "X6-delta",
    "X10-universal",
    "X5-majorana",
    "X-bb1-adiabatic",
    "H2",
    "H6",
    "H10",
    "H6-delta",
    "H10-universal",
    "ROT-3-pi/3",
    "F2",
    "F6",
    "F10",
    "T6",
)

_FAMILY = re.compile(r"^(?P<family>[XHF])(?P<pairs>\d+)(?P<delta>-delta)?$")
_ROTATION = re.compile(r"^ROT-(?P<n>\d+)-(?P<theta>.+)$")


class CatalogEntry(BaseModel):
    """A resolved catalog label."""

    model_config = ConfigDict(frozen=True)

    label: str
    sequence: CompositeSequence
    target: GateTarget
    alignment: Alignment = Alignment.NONE
    order: int | None = None
    note: str = ""


def _order_from_pairs(label: str, pairs: int) -> int:
    if pairs % 2:
        raise UnknownLabel(f"{label}: pair count must be even (2N), got {pairs}")
    n = pairs // 2
    if n % 2 == 0:
        raise UnknownLabel(f"{label}: composite order N = {n} must be odd")
    return n


def resolve(
    label: str,
    *,
    delta_t: float = 0.0,
    eta: float | None = None,
    shape: PulseShape | None = None,
) -> CatalogEntry:
    """Resolve a catalog label.

    Args:
        label: Catalog label, e.g. ``X6``, ``H6-delta``, ``ROT-3-pi/3`` or ``T6``.
        delta_t: Detuning-duration product ΔT the detuning-corrected variants are built for.
        eta: Phase-gate phase for ``F`` labels (default π/4).
        shape: Pulse shape for every pair (default rectangular, T = 1).

    Raises:
        UnknownLabel: If the label does not name a catalog sequence.
    """
    label = label.strip()
    try:
        entry = _resolve(label, delta_t, eta, shape)
    except InvalidN as exc:
        raise UnknownLabel(f"{label}: {exc}") from exc
    logger.debug("Resolved %s → %d pairs, target %s", label, len(entry.sequence), entry.target)
    return entry


def _family_sequence(
    family: str, n: int, variant: XVariant, shape: PulseShape | None
) -> CompositeSequence:
    if family == "H":
        return hadamard_sequence(n, shape, variant)
    return x_gate_sequence(n, variant, shape)


def _family_entry(
    label: str, family: str, seq: CompositeSequence, order: int | None, note: str = ""
) -> CatalogEntry:
    """X entries compare directly; the Hadamard family realizes −H and aligns the global phase."""
    if family == "H":
        return CatalogEntry(
            label=label,
            sequence=seq,
            target=GateTarget.hadamard(),
            alignment=Alignment.GLOBAL_PHASE,
            order=order,
            note="; ".join(filter(None, ["realizes −H", note])),
        )
    return CatalogEntry(label=label, sequence=seq, target=GateTarget.x(), order=order, note=note)


def _resolve(
    label: str, delta_t: float, eta: float | None, shape: PulseShape | None
) -> CatalogEntry:
    if label in ("X10-universal", "H10-universal"):
        family = label[0]
        shift = sequence_delta(_family_sequence(family, 5, XVariant.resonant(), shape), delta_t)
        seq = _family_sequence(family, 5, XVariant.moderate_detuning(shift), shape)
        note = f"universal CP phases, correction phase {shift:.12g} for ΔT={delta_t:g}"
        return _family_entry(label, family, seq, None, note)
    if label == "X5-majorana":
        return CatalogEntry(
            label=label,
            sequence=x_gate_sequence(5, XVariant.majorana(), shape),
            target=GateTarget.x(),
            alignment=Alignment.GLOBAL_PHASE,
            note="realizes −X",
        )
    if label == "X-bb1-adiabatic":
        seq = adiabatic_bb1_sequence(math.pi, shape)
        return CatalogEntry(
            label=label,
            sequence=seq,
            target=GateTarget.x(),
            alignment=Alignment.GLOBAL_PHASE,
            note=f"Ω₀ = Ω₁ = 40π/T, Δ = 20·Ω = {seq.detuning:.12g}/T (Stark phase is global)",
        )
    if label == "T6":
        return CatalogEntry(
            label=label,
            sequence=phase_gate_sequence(3, T_GATE_ETA, shape).model_copy(update={"label": "T6"}),
            target=GateTarget.phase(2 * T_GATE_ETA),
            alignment=Alignment.GLOBAL_PHASE,
            note="F6 with η = π/8, realizes exp(iπσ_z/8) (T gate up to global phase)",
        )

    if m := _ROTATION.match(label):
        n = int(m["n"])
        try:
            theta = parse_angle(m["theta"])
        except ParseError as exc:
            raise UnknownLabel(f"{label}: {exc}") from exc
        seq = rotation_sequence(n, theta, shape).model_copy(update={"label": label})
        return CatalogEntry(label=label, sequence=seq, target=GateTarget.rotation(theta), order=n)

    m = _FAMILY.match(label)
    if m is None:
        raise UnknownLabel(f"Unknown catalog label '{label}'")
    family, n = m["family"], _order_from_pairs(label, int(m["pairs"]))

    if family in ("X", "H"):
        if not m["delta"]:
            seq = _family_sequence(family, n, XVariant.resonant(), shape)
            return _family_entry(label, family, seq, n)
        shift = sequence_delta(_family_sequence(family, n, XVariant.resonant(), shape), delta_t)
        seq = _family_sequence(family, n, XVariant.small_detuning(shift), shape)
        note = f"correction phase {shift:.12g} for ΔT={delta_t:g}"
        return _family_entry(label, family, seq, n, note)
    if m["delta"]:
        raise UnknownLabel(f"Unknown catalog label '{label}': phase gates have no -delta form")
    phase = DEFAULT_ETA if eta is None else eta
    return CatalogEntry(
        label=label,
        sequence=phase_gate_sequence(n, phase, shape),
        target=GateTarget.phase(2 * phase),
        alignment=Alignment.GLOBAL_PHASE,
        note=f"η = {phase:.12g}, realizes exp(iησ_z)",
    )


def catalog(
    *, delta_t: float = 0.0, shape: PulseShape | None = None, name_filter: str = ""
) -> list[CatalogEntry]:
    """Every catalog entry whose label contains ``name_filter`` (case-insensitive)."""
    needle = name_filter.strip().lower()
    return [
        resolve(label, delta_t=delta_t, shape=shape)
        for label in CATALOG_LABELS
        if needle in label.lower()
    ]


def single_pair_comparator(entry: CatalogEntry) -> CatalogEntry:
    """The uncorrected single-pulse counterpart of ``entry`` used in robustness comparisons."""
    if entry.label == "X-bb1-adiabatic":
        seq = adiabatic_sequence(
            [math.pi], [0.0], entry.sequence.pairs[0].shape, label="X-adiabatic-1"
        )
        return entry.model_copy(update={"label": seq.label, "sequence": seq, "note": ""})
    return resolve("X2", shape=entry.sequence.pairs[0].shape)
