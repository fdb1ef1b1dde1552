"""Brute-force time-domain propagation of the three-state Schrödinger equation.

Fixed-step Runge-Kutta on i·dU/dt = H(t)·U. Each step is turned into its one-step propagator
matrix R_j (so that U_{j+1} = R_j·U_j); constant-envelope pulses reuse a single R and take a
matrix power, shaped pulses build the R_j in batches and multiply them by pairwise reduction.
"""

from __future__ import annotations

import cmath
import logging
import math
from enum import StrEnum
from typing import Annotated

import numpy as np
import numpy.typing as npt
from pydantic import BaseModel, ConfigDict, Field

from src.config import (
    CONVERGENCE_TOL,
    DEFAULT_STEPS,
    MAX_STEP_PHASE,
    MIN_STEPS,
    ORACLE_UNITARY_TOL,
    RENORMALIZE_EVERY,
)
from src.errors import NonConvergence, ZeroDetuning
from src.models.error_model import ErrorModel
from src.models.pulse_pair import PulsePair
from src.models.sequence import CompositeSequence, Scheme, apply_error, check_pair
from src.physics.linalg import (
    CMat,
    chain,
    expm_skew_hermitian,
    identity,
    polar_unitary,
    unitarity_defect,
)

logger = logging.getLogger(__name__)

_BLOCK_STEPS = 1 << 15

Stack = npt.NDArray[np.complex128]


class Method(StrEnum):
    RK4 = "rk4"
    MIDPOINT = "midpoint"


class IntegratorConfig(BaseModel):
    """Fixed-step integrator settings.

    The step count of a pulse is raised above ``steps_per_pulse`` when needed so that no step
    advances the phase by more than ``max_step_phase`` (‖H‖·h).
    """

    model_config = ConfigDict(frozen=True)

    steps_per_pulse: Annotated[int, Field(ge=MIN_STEPS)] = DEFAULT_STEPS
    method: Method = Method.RK4
    renormalize: bool = True
    renormalize_every: Annotated[int, Field(ge=1)] = RENORMALIZE_EVERY
    max_step_phase: Annotated[float, Field(gt=0)] = MAX_STEP_PHASE
    check_convergence: bool = True

    def doubled(self) -> IntegratorConfig:
        return self.model_copy(update={"steps_per_pulse": 2 * self.steps_per_pulse})


def _hamiltonian_stack(
    times: npt.NDArray[np.float64], pair: PulsePair, scheme: Scheme, detuning: float
) -> Stack:
    f = pair.shape.envelope(times)
    xi0, xi1 = pair.couplings
    c0 = 0.5 * xi0 * f * cmath.exp(1j * pair.phase0)
    c1 = 0.5 * xi1 * f * cmath.exp(1j * pair.phase1)
    h = np.zeros((times.size, 3, 3), dtype=np.complex128)
    h[:, 0, 2] = c0
    h[:, 1, 2] = c1
    h[:, 2, 0] = np.conj(c0)
    h[:, 2, 1] = np.conj(c1)
    if scheme is Scheme.MAJORANA:
        h[:, 0, 0] = -detuning
        h[:, 1, 1] = detuning
    else:
        h[:, 2, 2] = detuning
    return h


def hamiltonian_ms(t: float, pair: PulsePair, detuning: float) -> CMat:
    """½[Ω₀(t)e^{iφ₀}|0⟩⟨2| + Ω₁(t)e^{iφ₁}|1⟩⟨2| + h.c.] + Δ|2⟩⟨2|.

    Leg phases are taken as given, so this also serves Λ pairs with φ₀ ≠ φ₁.
    """
    return _hamiltonian_stack(np.array([t], dtype=np.float64), pair, Scheme.MS, detuning)[0]


def hamiltonian_majorana(t: float, pair: PulsePair, detuning: float) -> CMat:
    """½[Ω(t)e^{iφ}|0⟩⟨2| + Ω(t)e^{−iφ}|1⟩⟨2| + h.c.] + Δ(|1⟩⟨1| − |0⟩⟨0|).

    Raises:
        SchemeViolation: If the legs break |A₀| = |A₁| or φ₁ = −φ₀.
    """
    check_pair(pair, Scheme.MAJORANA)
    return _hamiltonian_stack(np.array([t], dtype=np.float64), pair, Scheme.MAJORANA, detuning)[0]


def _norm_bound(pair: PulsePair, scheme: Scheme, detuning: float) -> float:
    xi0, xi1 = pair.couplings
    coupling = 0.5 * math.hypot(xi0, xi1) * pair.shape.peak()
    return abs(detuning) + coupling


def steps_for(pair: PulsePair, scheme: Scheme, detuning: float, cfg: IntegratorConfig) -> int:
    phase = _norm_bound(pair, scheme, detuning) * pair.duration
    return max(cfg.steps_per_pulse, math.ceil(phase / cfg.max_step_phase))


def _step_propagators(
    m1: Stack, m2: Stack, m3: Stack, h: float, method: Method
) -> Stack:
    """One-step propagators R for generators M = −iH at t, t+h/2 and t+h."""
    eye = np.broadcast_to(np.eye(3, dtype=np.complex128), m1.shape)
    if method is Method.MIDPOINT:
        return eye + h * (m2 @ (eye + 0.5 * h * m1))
    a1 = m1
    a2 = m2 @ (eye + 0.5 * h * a1)
    a3 = m2 @ (eye + 0.5 * h * a2)
    a4 = m3 @ (eye + h * a3)
    return eye + (h / 6.0) * (a1 + 2.0 * a2 + 2.0 * a3 + a4)


def _reduce_product(stack: Stack) -> CMat:
    """Time-ordered product R_{n−1}···R_0 of a (n, 3, 3) stack."""
    while stack.shape[0] > 1:
        tail = stack[-1:] if stack.shape[0] % 2 else None
        even = stack[: stack.shape[0] - (1 if tail is not None else 0)]
        stack = even[1::2] @ even[0::2]
        if tail is not None:
            stack = np.concatenate([stack, tail])
    return stack[0]


def _polar_stack(stack: Stack) -> Stack:
    w, _, vh = np.linalg.svd(stack)
    return w @ vh


def _chunked(stack: Stack, size: int, renormalize: bool) -> CMat:
    """Product of a block of steps, re-unitarizing after every ``size`` steps."""
    if not renormalize:
        return _reduce_product(stack)
    n_full = stack.shape[0] // size
    products: list[CMat] = []
    if n_full:
        chunks = stack[: n_full * size].reshape(n_full, size, 3, 3)
        while chunks.shape[1] > 1:
            odd = chunks.shape[1] % 2
            tail = chunks[:, -1:] if odd else None
            even = chunks[:, : chunks.shape[1] - odd]
            chunks = even[:, 1::2] @ even[:, 0::2]
            if tail is not None:
                chunks = np.concatenate([chunks, tail], axis=1)
        products.extend(_polar_stack(chunks[:, 0]))
    if stack.shape[0] > n_full * size:
        products.append(polar_unitary(_reduce_product(stack[n_full * size :])))
    return _reduce_product(np.stack(products))


def _propagate_constant(
    pair: PulsePair, scheme: Scheme, detuning: float, n: int, cfg: IntegratorConfig
) -> CMat:
    h = pair.duration / n
    m = -1j * _hamiltonian_stack(np.array([0.5 * pair.duration]), pair, scheme, detuning)
    r = _step_propagators(m, m, m, h, cfg.method)[0]
    if not cfg.renormalize:
        return np.linalg.matrix_power(r, n)
    k = cfg.renormalize_every
    full, rest = divmod(n, k)
    u = np.linalg.matrix_power(polar_unitary(np.linalg.matrix_power(r, k)), full)
    if rest:
        u = polar_unitary(np.linalg.matrix_power(r, rest)) @ u
    return u


def _propagate_shaped(
    pair: PulsePair, scheme: Scheme, detuning: float, n: int, cfg: IntegratorConfig
) -> CMat:
    h = pair.duration / n
    k = cfg.renormalize_every
    block = max(k, (_BLOCK_STEPS // k) * k)
    u = identity(3)
    for start in range(0, n, block):
        steps = np.arange(start, min(start + block, n), dtype=np.float64)
        t0 = steps * h
        m1 = -1j * _hamiltonian_stack(t0, pair, scheme, detuning)
        m2 = -1j * _hamiltonian_stack(t0 + 0.5 * h, pair, scheme, detuning)
        m3 = -1j * _hamiltonian_stack(t0 + h, pair, scheme, detuning)
        r = _step_propagators(m1, m2, m3, h, cfg.method)
        u = _chunked(r, k, cfg.renormalize) @ u
    return u


def integrate_pair(
    pair: PulsePair, scheme: Scheme, detuning: float, cfg: IntegratorConfig
) -> CMat:
    check_pair(pair, scheme)
    n = steps_for(pair, scheme, detuning, cfg)
    if pair.shape.is_rectangular:
        return _propagate_constant(pair, scheme, detuning, n, cfg)
    return _propagate_shaped(pair, scheme, detuning, n, cfg)


def _integrate_once(seq: CompositeSequence, cfg: IntegratorConfig) -> CMat:
    u = identity(3)
    for pair in seq.pairs:
        u = integrate_pair(pair, seq.scheme, seq.detuning, cfg) @ u
    return u


def integrate(
    seq: CompositeSequence, em: ErrorModel | None = None, cfg: IntegratorConfig | None = None
) -> CMat:
    """Time-ordered propagator of ``seq`` under ``em`` by fixed-step integration.

    With ``cfg.check_convergence`` the sequence is integrated a second time with twice the
    steps and the finer result is returned.

    Raises:
        NonConvergence: If step halving moves any entry by more than 1e−6.
    """
    cfg = cfg or IntegratorConfig()
    seq = apply_error(seq, em or ErrorModel())
    seq.check_scheme()
    u = _integrate_once(seq, cfg)
    if cfg.check_convergence:
        finer = _integrate_once(seq, cfg.doubled())
        change = float(np.max(np.abs(finer - u)))
        logger.debug("Step-halving change for %s: %.3e", seq.label, change)
        if change > CONVERGENCE_TOL:
            raise NonConvergence(
                f"{seq.label}: halving the step changed the propagator by {change:.3e} "
                f"(> {CONVERGENCE_TOL:g}); raise steps_per_pulse"
            )
        u = finer
    defect = unitarity_defect(u)
    if defect > ORACLE_UNITARY_TOL:
        logger.warning("%s: integrated propagator off unitarity by %.3e", seq.label, defect)
    return u


class EffectiveTwoState(BaseModel):
    """Far-detuned Λ pair reduced to {|0⟩, |1⟩}.

    Ω_k are the constant-envelope-equivalent complex Rabi frequencies of the legs.
    """

    model_config = ConfigDict(frozen=True)

    omega0: complex
    omega1: complex
    detuning: float
    duration: float

    @property
    def omega_eff(self) -> complex:
        return -self.omega0 * self.omega1.conjugate() / (2.0 * self.detuning)

    @property
    def stark0(self) -> float:
        return -abs(self.omega0) ** 2 / (4.0 * self.detuning)

    @property
    def stark1(self) -> float:
        return -abs(self.omega1) ** 2 / (4.0 * self.detuning)

    def effective_area(self) -> float:
        return abs(self.omega_eff) * self.duration

    def hamiltonian(self) -> CMat:
        w = 0.5 * self.omega_eff
        return np.array(
            [[self.stark0, w], [w.conjugate(), self.stark1]], dtype=np.complex128
        )

    def propagator(self) -> CMat:
        return expm_skew_hermitian(self.hamiltonian(), self.duration)


def adiabatic_effective(pair: PulsePair, detuning: float) -> EffectiveTwoState:
    """Adiabatically eliminate |2⟩ from a far-detuned pair.

    Every effective term scales with f(t)², so a shaped pulse is represented by the constant
    envelope with the same ∫f² dt.

    Raises:
        ZeroDetuning: On resonance.
    """
    if detuning == 0.0:
        raise ZeroDetuning("Adiabatic elimination needs a nonzero single-photon detuning")
    xi0, xi1 = pair.couplings
    rms_envelope = math.sqrt(pair.shape.power() / pair.duration)
    return EffectiveTwoState(
        omega0=xi0 * rms_envelope * cmath.exp(1j * pair.phase0),
        omega1=xi1 * rms_envelope * cmath.exp(1j * pair.phase1),
        detuning=detuning,
        duration=pair.duration,
    )


def effective_propagator(seq: CompositeSequence, em: ErrorModel | None = None) -> CMat:
    """Time-ordered 2×2 propagator of ``seq`` with |2⟩ eliminated from every pair.

    Raises:
        ZeroDetuning: If the sequence (with the error detuning folded in) is resonant.
    """
    seq = apply_error(seq, em or ErrorModel())
    return chain([adiabatic_effective(p, seq.detuning).propagator() for p in seq.pairs])
