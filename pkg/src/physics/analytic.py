"""Closed-form propagators for Raman pulse pairs.

Two-state Cayley-Klein parameters are lifted to the three-state Λ system either through the
Morris-Shore bright/dark basis (equal leg phases, single-photon detuning) or through the
Majorana spin-1 mapping (opposite leg phases, two-photon detuning). Sequences are composed
right-to-left in time order.
"""

from __future__ import annotations

import cmath
import logging
import math

import numpy as np
from pydantic import BaseModel, ConfigDict, model_validator

from src.config import UNITARY_TOL
from src.errors import EngineMismatch, ZeroCoupling
from src.models.error_model import ErrorModel
from src.models.pulse_pair import PulsePair
from src.models.sequence import CompositeSequence, Scheme, apply_error, check_pair
from src.physics.linalg import CMat, adjoint, chain, expm_skew_hermitian

logger = logging.getLogger(__name__)

_SQRT2 = math.sqrt(2.0)


class CKParams(BaseModel):
    """Cayley-Klein pair (a, b) of an SU(2) propagator [[a, b], [−b*, a*]]."""

    model_config = ConfigDict(frozen=True)

    a: complex
    b: complex

    @model_validator(mode="after")
    def validate_unimodular(self) -> CKParams:
        """Ensure |a|² + |b|² = 1."""
        norm = abs(self.a) ** 2 + abs(self.b) ** 2
        if abs(norm - 1.0) > UNITARY_TOL:
            raise ValueError(f"|a|² + |b|² = {norm!r}, expected 1")
        return self

    @classmethod
    def from_matrix(cls, m: CMat) -> CKParams:
        """Read (a, b) off the first row of an SU(2) matrix, renormalizing roundoff."""
        a, b = complex(m[0, 0]), complex(m[0, 1])
        norm = math.sqrt(abs(a) ** 2 + abs(b) ** 2)
        return cls(a=a / norm, b=b / norm)

    def matrix(self, phi: float = 0.0) -> CMat:
        return su2_matrix(self, phi)

    def then(self, later: CKParams) -> CKParams:
        """CK parameters of ``later`` applied after ``self`` (zero phase on both)."""
        return CKParams.from_matrix(later.matrix() @ self.matrix())


def su2_matrix(ck: CKParams, phi: float = 0.0) -> CMat:
    """[[a, b·e^{iφ}], [−b*·e^{−iφ}, a*]]."""
    e = cmath.exp(1j * phi)
    a, b = ck.a, ck.b
    return np.array(
        [[a, b * e], [-b.conjugate() * e.conjugate(), a.conjugate()]], dtype=np.complex128
    )


def ck_resonant(area: float) -> CKParams:
    return CKParams(a=complex(math.cos(area / 2)), b=complex(0.0, -math.sin(area / 2)))


def ck_detuned_const(area: float, detuning: float, duration: float) -> tuple[CKParams, float]:
    """CK parameters and δ for a constant-envelope pulse with constant single-photon detuning.

    The bright/excited block ½[[0, Ω], [Ω, 2Δ]] with Ω = A/T is exponentiated and factored as
    e^{−iδ}·[[a, b], [−b*, a*]] with δ = ΔT/2.
    """
    if duration <= 0:
        raise ValueError(f"Duration must be positive, got {duration}")
    rabi = area / duration
    h = np.array([[0.0, 0.5 * rabi], [0.5 * rabi, detuning]], dtype=np.complex128)
    u = expm_skew_hermitian(h, duration)
    delta = 0.5 * detuning * duration
    return CKParams.from_matrix(cmath.exp(1j * delta) * u), delta


def ck_majorana(leg_area: float, detuning: float = 0.0, duration: float = 1.0) -> CKParams:
    """Two-state CK parameters of a Majorana pair with leg area ``leg_area``.

    The spin-1/2 problem sees the coupling scaled by 1/√2, so its pulse area is |A|/√2. The
    detuned case exponentiates [[−Δ/2, Ω/(2√2)], [Ω/(2√2), Δ/2]] in the (↓, ↑) basis.
    """
    area = abs(leg_area) / _SQRT2
    if detuning == 0.0:
        return ck_resonant(area)
    if duration <= 0:
        raise ValueError(f"Duration must be positive, got {duration}")
    w = 0.5 * area / duration
    h = np.array([[-0.5 * detuning, w], [w, 0.5 * detuning]], dtype=np.complex128)
    return CKParams.from_matrix(expm_skew_hermitian(h, duration))


def ms_basis_propagator(ck: CKParams, phi: float, delta: float) -> CMat:
    """Propagator in the {|d⟩, |c⟩, |2⟩} basis."""
    u = np.zeros((3, 3), dtype=np.complex128)
    u[0, 0] = cmath.exp(1j * delta)
    u[1:, 1:] = su2_matrix(ck, phi)
    return cmath.exp(-1j * delta) * u


def ms_frame(xi0: float, xi1: float) -> CMat:
    """Columns are |d⟩ = (ξ₁, −ξ₀, 0)/ξ, |c⟩ = (ξ₀, ξ₁, 0)/ξ and |2⟩."""
    xi = math.hypot(xi0, xi1)
    if xi == 0.0:
        raise ZeroCoupling("At least one of ξ₀, ξ₁ must be nonzero")
    return np.array(
        [[xi1 / xi, xi0 / xi, 0.0], [-xi0 / xi, xi1 / xi, 0.0], [0.0, 0.0, 1.0]],
        dtype=np.complex128,
    )


def ms_lift(xi0: float, xi1: float, phi: float, ck: CKParams, delta: float) -> CMat:
    """Three-state propagator of one MS pair in the original {|0⟩, |1⟩, |2⟩} basis.

    Raises:
        ZeroCoupling: If both couplings vanish.
    """
    xi_sq = xi0 * xi0 + xi1 * xi1
    if xi_sq == 0.0:
        raise ZeroCoupling("At least one of ξ₀, ξ₁ must be nonzero")
    xi = math.sqrt(xi_sq)
    a, b = ck.a, ck.b
    ed = cmath.exp(1j * delta)
    ep = cmath.exp(1j * phi)
    bc = b.conjugate()
    u = np.array(
        [
            [a * xi0**2 + ed * xi1**2, xi0 * xi1 * (a - ed), xi0 * xi * b * ep],
            [xi0 * xi1 * (a - ed), ed * xi0**2 + a * xi1**2, xi1 * xi * b * ep],
            [-xi0 * xi * bc / ep, -xi1 * xi * bc / ep, xi_sq * a.conjugate()],
        ],
        dtype=np.complex128,
    )
    return (ed.conjugate() / xi_sq) * u


def majorana_lift(ck: CKParams, phi: float) -> CMat:
    """Spin-1 image of the two-state propagator [[a, b·e^{iφ}], [−b*·e^{−iφ}, a*]]."""
    a, b = ck.a, ck.b
    ac, bc = a.conjugate(), b.conjugate()
    ep = cmath.exp(1j * phi)
    epc = ep.conjugate()
    return np.array(
        [
            [a * a, b * b * ep * ep, _SQRT2 * a * b * ep],
            [bc * bc * epc * epc, ac * ac, -_SQRT2 * ac * bc * epc],
            [-_SQRT2 * a * bc * epc, _SQRT2 * ac * b * ep, abs(a) ** 2 - abs(b) ** 2],
        ],
        dtype=np.complex128,
    )


def _sign(x: float) -> float:
    return -1.0 if x < 0 else 1.0


def pair_propagator(pair: PulsePair, scheme: Scheme, detuning: float = 0.0) -> CMat:
    """Closed-form propagator of a single pair.

    Raises:
        SchemeViolation: If the pair breaks the scheme constraints.
        EngineMismatch: If a shaped pulse is detuned (no closed form).
    """
    check_pair(pair, scheme)
    if detuning != 0.0 and not pair.shape.is_rectangular:
        raise EngineMismatch(
            f"No closed form for {pair.shape.describe()} pulses at detuning {detuning!r}; "
            "use the oracle engine"
        )

    if scheme is Scheme.MAJORANA:
        ck = ck_majorana(pair.area0, detuning, pair.duration)
        signs = np.diag([_sign(pair.area0), _sign(pair.area1), 1.0]).astype(np.complex128)
        return signs @ majorana_lift(ck, pair.phase0) @ signs

    xi0, xi1 = pair.couplings
    if detuning == 0.0:
        ck, delta = ck_resonant(pair.rms_area), 0.0
    else:
        ck, delta = ck_detuned_const(pair.rms_area, detuning, pair.duration)
    u = ms_lift(xi0, xi1, pair.phase0, ck, delta)
    if scheme is Scheme.LAMBDA and pair.phase1 != pair.phase0:
        d = np.diag([1.0, cmath.exp(1j * (pair.phase1 - pair.phase0)), 1.0])
        u = d @ u @ adjoint(d)
    return u


def sequence_propagator(seq: CompositeSequence, em: ErrorModel | None = None) -> CMat:
    """Time-ordered product of the lifted pair propagators of ``seq`` under ``em``."""
    seq = apply_error(seq, em or ErrorModel())
    seq.check_scheme()
    logger.debug(
        "Analytic propagation of %s: %d %s pairs, Δ=%r",
        seq.label,
        len(seq.pairs),
        seq.scheme.value,
        seq.detuning,
    )
    return chain([pair_propagator(p, seq.scheme, seq.detuning) for p in seq.pairs])
