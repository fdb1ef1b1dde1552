"""Builders for the composite Raman gate sequences."""

from __future__ import annotations

import math
from enum import StrEnum

from pydantic import BaseModel, ConfigDict

from src.catalog.phases import bb1, bb1_areas, two_pi_cp, universal_two_pi_cp, validate_order
from src.config import ADIABATIC_DETUNING_RATIO, ADIABATIC_RABI_AREA
from src.errors import InvalidVariant
from src.models.pulse_pair import PulsePair, delta_phase, pair_from_couplings
from src.models.sequence import CompositeSequence, Scheme
from src.models.shape import PulseShape

_SQRT2 = math.sqrt(2.0)

X_COUPLINGS = (1 / _SQRT2, -1 / _SQRT2)
HADAMARD_COUPLINGS = (math.sqrt(2 + _SQRT2) / 2, math.sqrt(2 - _SQRT2) / 2)
MAJORANA_LEG_AREA = _SQRT2 * math.pi


class XVariantKind(StrEnum):
    RESONANT = "resonant"
    SMALL_DETUNING = "small_detuning"
    MODERATE_DETUNING = "moderate_detuning"
    MAJORANA = "majorana"
    LARGE_DETUNING = "large_detuning"


class XVariant(BaseModel):
    """Which X-gate construction to build; ``shift`` is the detuning phase correction δ."""

    model_config = ConfigDict(frozen=True)

    kind: XVariantKind = XVariantKind.RESONANT
    shift: float = 0.0

    @classmethod
    def resonant(cls) -> XVariant:
        return cls()

    @classmethod
    def small_detuning(cls, shift: float) -> XVariant:
        return cls(kind=XVariantKind.SMALL_DETUNING, shift=shift)

    @classmethod
    def moderate_detuning(cls, shift: float) -> XVariant:
        return cls(kind=XVariantKind.MODERATE_DETUNING, shift=shift)

    @classmethod
    def majorana(cls) -> XVariant:
        return cls(kind=XVariantKind.MAJORANA)

    @classmethod
    def large_detuning(cls) -> XVariant:
        return cls(kind=XVariantKind.LARGE_DETUNING)


def _ms_sequence(
    couplings: tuple[float, float],
    phases: list[float],
    label: str,
    shape: PulseShape | None,
) -> CompositeSequence:
    xi0, xi1 = couplings
    pairs = tuple(pair_from_couplings(xi0, xi1, phi, shape) for phi in phases)
    return CompositeSequence(pairs=pairs, scheme=Scheme.MS, label=label)


def _majorana_sequence(
    phases: list[float], label: str, shape: PulseShape | None
) -> CompositeSequence:
    shape = (shape or PulseShape.rectangular()).normalize()
    pairs = tuple(
        PulsePair(
            area0=MAJORANA_LEG_AREA,
            area1=MAJORANA_LEG_AREA,
            phase0=phi,
            phase1=-phi,
            shape=shape,
        )
        for phi in phases
    )
    return CompositeSequence(pairs=pairs, scheme=Scheme.MAJORANA, label=label)


def _family_phases(prefix: str, n: int, variant: XVariant) -> tuple[list[float], str]:
    match variant.kind:
        case XVariantKind.RESONANT:
            return two_pi_cp(n, 0.0), f"{prefix}{2 * n}"
        case XVariantKind.SMALL_DETUNING:
            return two_pi_cp(n, variant.shift), f"{prefix}{2 * n}-delta"
        case XVariantKind.MODERATE_DETUNING:
            return universal_two_pi_cp(variant.shift), f"{prefix}10-universal"
    raise InvalidVariant(f"No {variant.kind.value} construction for the {prefix} family")


def _check_five_only(variant: XVariant, n: int, kinds: tuple[XVariantKind, ...]) -> None:
    if variant.kind in kinds and n != 5:
        raise InvalidVariant(f"The {variant.kind.value} variant is defined for N = 5 only, got {n}")


def x_gate_sequence(
    n: int, variant: XVariant | None = None, shape: PulseShape | None = None
) -> CompositeSequence:
    """Composite Raman X gate.

    Resonant and small-detuning variants take any odd ``n`` (2N MS pairs); the universal,
    Majorana and large-detuning constructions exist only for ``n = 5``.

    Raises:
        InvalidN: If ``n`` is not a positive odd integer.
        InvalidVariant: If the variant does not exist for ``n``.
    """
    validate_order(n)
    variant = variant or XVariant.resonant()
    _check_five_only(
        variant,
        n,
        (XVariantKind.MODERATE_DETUNING, XVariantKind.MAJORANA, XVariantKind.LARGE_DETUNING),
    )
    match variant.kind:
        case XVariantKind.MAJORANA:
            return _majorana_sequence(bb1(math.pi), "X5-majorana", shape)
        case XVariantKind.LARGE_DETUNING:
            return adiabatic_bb1_sequence(math.pi, shape)
    phases, label = _family_phases("X", n, variant)
    return _ms_sequence(X_COUPLINGS, phases, label, shape)


def adiabatic_sequence(
    areas: list[float],
    phases: list[float],
    shape: PulseShape | None = None,
    label: str = "",
) -> CompositeSequence:
    """Far-detuned Λ pairs acting as effective two-state pulses of the given areas and phases.

    A nominal π pulse has legs of area 40π and the single-photon detuning is 20·Ω of that pulse.
    The effective area scales with the product of the leg areas, so a pulse of effective area A
    has legs 40π·√(A/π). The effective phase is the leg-0 phase (leg 1 stays at phase 0).

    Raises:
        ValueError: If ``areas`` and ``phases`` differ in length or an area is not positive.
    """
    if len(areas) != len(phases):
        raise ValueError(f"Got {len(areas)} effective areas for {len(phases)} phases")
    if any(a <= 0.0 for a in areas):
        raise ValueError(f"Effective areas must be positive, got {areas!r}")
    shape = (shape or PulseShape.rectangular()).normalize()
    nominal = ADIABATIC_RABI_AREA * math.pi
    pairs = []
    for area, phi in zip(areas, phases, strict=True):
        leg = nominal * math.sqrt(area / math.pi)
        pairs.append(PulsePair(area0=leg, area1=leg, phase0=phi, phase1=0.0, shape=shape))
    return CompositeSequence(
        pairs=tuple(pairs),
        scheme=Scheme.LAMBDA,
        label=label or f"adiabatic-{len(pairs)}",
        detuning=ADIABATIC_DETUNING_RATIO * nominal / shape.duration,
    )


def adiabatic_bb1_sequence(
    theta: float = math.pi, shape: PulseShape | None = None
) -> CompositeSequence:
    """BB1 rotation by ``theta`` through the far-detuned two-photon coupling.

    θ = π is the X gate (up to the global Stark phase); θ = π/2 is the half-π BB1 pulse.

    Raises:
        InvalidTheta: If θ is outside (0, 2π].
    """
    label = "X-bb1-adiabatic" if theta == math.pi else f"BB1-adiabatic-{theta:.12g}"
    return adiabatic_sequence(bb1_areas(theta), bb1(theta), shape, label)


def hadamard_sequence(
    n: int, shape: PulseShape | None = None, variant: XVariant | None = None
) -> CompositeSequence:
    """2N MS pairs with couplings (√(2+√2), √(2−√2))/2, realizing −H.

    The small- and moderate-detuning corrections carry over from the X gate unchanged. There is
    no Majorana Hadamard, and the large-detuning half-π BB1 alone gives a π/2 rotation, which
    needs a further Z to become H.

    Raises:
        InvalidN: If ``n`` is not a positive odd integer.
        InvalidVariant: For the Majorana and large-detuning variants, or universal with n ≠ 5.
    """
    validate_order(n)
    variant = variant or XVariant.resonant()
    _check_five_only(variant, n, (XVariantKind.MODERATE_DETUNING,))
    phases, label = _family_phases("H", n, variant)
    return _ms_sequence(HADAMARD_COUPLINGS, phases, label, shape)


def rotation_sequence(n: int, theta: float, shape: PulseShape | None = None) -> CompositeSequence:
    """2N MS pairs with couplings (sin(θ/2), −cos(θ/2)) realizing the reflection-form rotation."""
    validate_order(n)
    couplings = (math.sin(theta / 2), -math.cos(theta / 2))
    return _ms_sequence(couplings, two_pi_cp(n, 0.0), f"ROT-{n}-{theta:.12g}", shape)


def phase_gate_sequence(n: int, eta: float, shape: PulseShape | None = None) -> CompositeSequence:
    """2N Majorana π pairs with phases two_pi_cp(N, η/2).

    The realized qubit block is diag(e^{iη}, e^{−iη}), i.e. ``GateTarget.phase(2·eta)``.
    """
    validate_order(n)
    return _majorana_sequence(two_pi_cp(n, eta / 2), f"F{2 * n}", shape)


def sequence_delta(seq: CompositeSequence, delta_t: float) -> float:
    """Bright-state phase accumulated over the whole sequence at detuning-duration product ΔT."""
    return sum(delta_phase(p, delta_t / p.duration) for p in seq.pairs)
