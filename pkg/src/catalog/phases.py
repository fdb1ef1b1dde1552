"""Phase lists of the broadband composite pulses.

BB and universal phases are exact rational multiples of π (``Fraction`` holds the multiple) and
are only converted to radians on request.
"""

from __future__ import annotations

import math
from fractions import Fraction

from src.errors import InvalidN, InvalidTheta

UNIVERSAL_CP5 = (Fraction(0), Fraction(5, 6), Fraction(1, 3), Fraction(5, 6), Fraction(0))


def validate_order(n: int) -> int:
    """Return ``n`` if it is a positive odd integer.

    Raises:
        InvalidN: Otherwise.
    """
    if isinstance(n, bool) or not isinstance(n, int) or n < 1 or n % 2 == 0:
        raise InvalidN(f"Composite order must be a positive odd integer, got {n!r}")
    return n


def to_radians(multiples: list[Fraction]) -> list[float]:
    return [float(m) * math.pi for m in multiples]


def bb_phase_multiples(n: int) -> list[Fraction]:
    """k(k−1)/N for k = 1..N, reduced into [0, 2)."""
    validate_order(n)
    return [Fraction(k * (k - 1) % (2 * n), n) for k in range(1, n + 1)]


def bb_phases(n: int) -> list[float]:
    """Broadband π composite pulse phases φ_k = k(k−1)π/N mod 2π."""
    return to_radians(bb_phase_multiples(n))


def two_pi_cp(n: int, shift: float = 0.0) -> list[float]:
    """Two BB π sequences back to back, the second shifted by ``shift``."""
    base = bb_phases(n)
    return base + [phi + shift for phi in base]


def universal_cp5() -> list[float]:
    return to_radians(list(UNIVERSAL_CP5))


def universal_two_pi_cp(shift: float = 0.0) -> list[float]:
    base = universal_cp5()
    return base + [phi + shift for phi in base]


def bb1_zeta(theta: float) -> float:
    """ζ = arccos(−θ/(4π)).

    Raises:
        InvalidTheta: If θ is outside (0, 2π].
    """
    if not (0.0 < theta <= 2.0 * math.pi):
        raise InvalidTheta(f"BB1 target angle must lie in (0, 2π], got {theta!r}")
    return math.acos(-theta / (4.0 * math.pi))


def bb1(theta: float = math.pi) -> list[float]:
    """BB1 phases (ζ, 3ζ, 3ζ, ζ, 0); the first four pulses are π, the last one θ."""
    zeta = bb1_zeta(theta)
    return [zeta, 3 * zeta, 3 * zeta, zeta, 0.0]


def bb1_areas(theta: float = math.pi) -> list[float]:
    """Nominal two-state areas matching :func:`bb1`."""
    bb1_zeta(theta)
    return [math.pi] * 4 + [theta]
