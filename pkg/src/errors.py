"""Domain exceptions.

Input problems subclass ``ValueError`` so callers that only care about bad input can catch
them generically; numerical failures subclass ``RuntimeError``.
"""


class RamanCPError(Exception):
    """Base class for every error raised by this package."""


class NonHermitianInput(RamanCPError, ValueError):
    """Raised when a generator handed to the exponential is not Hermitian."""


class NonUnitaryInput(RamanCPError, ValueError):
    """Raised when a propagator is required but the matrix is not unitary."""


class ZeroCoupling(RamanCPError, ValueError):
    """Raised when both Raman legs have zero coupling."""


class InvalidEpsilon(RamanCPError, ValueError):
    """Raised when a pulse-area error would flip the sign of the areas (ε ≤ −1)."""


class SchemeViolation(RamanCPError, ValueError):
    """Raised when a pulse pair breaks the phase/area constraints of its coupling scheme."""


class InvalidN(RamanCPError, ValueError):
    """Raised when a composite order is not a positive odd integer."""


class InvalidVariant(RamanCPError, ValueError):
    """Raised when a sequence variant is not available for the requested order."""


class InvalidTheta(RamanCPError, ValueError):
    """Raised when a BB1 target angle is outside (0, 2π]."""


class ZeroDetuning(RamanCPError, ValueError):
    """Raised when adiabatic elimination is requested on resonance."""


class EngineMismatch(RamanCPError, ValueError):
    """Raised when the analytic engine is asked to propagate shaped detuned pulses."""


class UnknownLabel(RamanCPError, ValueError):
    """Raised for catalog labels that do not resolve to a sequence."""


class ParseError(RamanCPError, ValueError):
    """Raised when a sequence file or numeric expression cannot be parsed."""


class NonConvergence(RamanCPError, RuntimeError):
    """Raised when step halving changes the integrated propagator beyond tolerance."""


class DegenerateCurve(RamanCPError, RuntimeError):
    """Raised when an infidelity curve sits at the numerical noise floor."""
