"""Value types for pulses, sequences, errors and gate targets."""

from src.models.error_model import ErrorModel
from src.models.pulse_pair import PulsePair, delta_phase, pair_from_couplings
from src.models.sequence import CompositeSequence, Scheme, apply_error
from src.models.shape import PulseShape, ShapeKind
from src.models.target import Alignment, GateKind, GateTarget

__all__ = [
    "Alignment",
    "CompositeSequence",
    "ErrorModel",
    "GateKind",
    "GateTarget",
    "PulsePair",
    "PulseShape",
    "Scheme",
    "ShapeKind",
    "apply_error",
    "delta_phase",
    "pair_from_couplings",
]
