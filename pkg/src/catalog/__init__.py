"""Phase tables, sequence builders and the named sequence catalog."""

from src.catalog.phases import bb1, bb_phases, two_pi_cp, universal_two_pi_cp
from src.catalog.registry import CATALOG_LABELS, CatalogEntry, catalog, resolve
from src.catalog.sequences import (
    XVariant,
    adiabatic_bb1_sequence,
    adiabatic_sequence,
    hadamard_sequence,
    phase_gate_sequence,
    rotation_sequence,
    x_gate_sequence,
)

__all__ = [
    "CATALOG_LABELS",
    "CatalogEntry",
    "XVariant",
    "adiabatic_bb1_sequence",
    "adiabatic_sequence",
    "bb1",
    "bb_phases",
    "catalog",
    "hadamard_sequence",
    "phase_gate_sequence",
    "resolve",
    "rotation_sequence",
    "two_pi_cp",
    "universal_two_pi_cp",
    "x_gate_sequence",
]
