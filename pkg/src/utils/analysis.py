"""Gate infidelity, the closed-form error law and robustness-order estimation."""

from __future__ import annotations

import logging
import math
from enum import StrEnum

import numpy as np
from scipy import optimize

from src.catalog.phases import validate_order
from src.config import FIT_POINTS, FIT_WINDOW, NOISE_FLOOR
from src.errors import DegenerateCurve, EngineMismatch, NonUnitaryInput
from src.models.error_model import ErrorModel
from src.models.sequence import CompositeSequence
from src.models.target import Alignment, GateTarget
from src.physics.analytic import sequence_propagator
from src.physics.linalg import CMat, as_cmat, frobenius_dist, qubit_block, unitarity_defect
from src.physics.oracle import IntegratorConfig, integrate

logger = logging.getLogger(__name__)

_UNITARITY_CHECK = 1e-6
_WINDOW_SHIFT = 10.0**0.25
_WINDOW_CAP = 0.5


class Engine(StrEnum):
    ANALYTIC = "analytic"
    ORACLE = "oracle"


def infidelity(u: CMat, target: GateTarget, align: Alignment = Alignment.NONE) -> float:
    """Frobenius distance between the qubit block of ``u`` and the target gate.

    With ``Alignment.GLOBAL_PHASE`` the block is first multiplied by the unit-modulus factor
    that minimizes the distance (the phase of the overlap tr(G†B)).

    Raises:
        NonUnitaryInput: If ``u`` is not a three-state propagator.
    """
    u = as_cmat(u)
    if u.shape != (3, 3) or unitarity_defect(u) > _UNITARITY_CHECK:
        raise NonUnitaryInput(f"Expected a unitary 3×3 propagator, got defect on {u.shape}")
    block = qubit_block(u)
    gate = target.qubit_matrix
    if align is Alignment.GLOBAL_PHASE:
        overlap = complex(np.trace(gate.conj().T @ block))
        if abs(overlap) > 0.0:
            block = block * (overlap.conjugate() / abs(overlap))
    return frobenius_dist(block, gate)


def analytic_infidelity(n: int, epsilon: float) -> float:
    """D = 2·sin^{2N}(πε/2)."""
    validate_order(n)
    return 2.0 * math.sin(math.pi * epsilon / 2.0) ** (2 * n)


def law_half_width(n: int, threshold: float) -> float:
    """ε > 0 at which the closed-form law reaches ``threshold``."""
    validate_order(n)
    if not 0.0 < threshold < 2.0:
        raise ValueError(f"Threshold must lie in (0, 2), got {threshold!r}")
    return float(optimize.brentq(lambda e: analytic_infidelity(n, e) - threshold, 0.0, 1.0))


def propagate(
    seq: CompositeSequence,
    em: ErrorModel | None = None,
    engine: Engine = Engine.ANALYTIC,
    cfg: IntegratorConfig | None = None,
) -> CMat:
    """Propagator of ``seq`` with the chosen engine.

    Raises:
        EngineMismatch: If the analytic engine meets shaped detuned pulses.
    """
    if engine is Engine.ORACLE:
        return integrate(seq, em, cfg)
    return sequence_propagator(seq, em)


def check_engine(seq: CompositeSequence, engine: Engine, delta_ts: list[float]) -> None:
    """Fail early when the analytic engine cannot serve every requested detuning."""
    if engine is Engine.ANALYTIC and not seq.all_rectangular:
        if seq.detuning != 0.0 or any(dt != 0.0 for dt in delta_ts):
            raise EngineMismatch(
                f"{seq.label}: analytic path unavailable for shaped detuned pulses; oracle-only"
            )


def gate_infidelity(
    seq: CompositeSequence,
    target: GateTarget,
    em: ErrorModel | None = None,
    align: Alignment = Alignment.NONE,
    engine: Engine = Engine.ANALYTIC,
    cfg: IntegratorConfig | None = None,
) -> float:
    return infidelity(propagate(seq, em, engine, cfg), target, align)


def robustness_order(
    seq: CompositeSequence,
    target: GateTarget,
    align: Alignment = Alignment.NONE,
    engine: Engine = Engine.ANALYTIC,
    window: tuple[float, float] = FIT_WINDOW,
    points: int = FIT_POINTS,
) -> float:
    """Least-squares slope of log D against log ε on a log-spaced fitting window.

    The window starts at ``window`` and is moved up by a quarter decade at a time while any
    sample sits below the numerical noise floor.

    Raises:
        DegenerateCurve: If no window below ε = 0.5 clears the noise floor.
    """
    lo, hi = window
    ratio = hi / lo
    while hi <= _WINDOW_CAP:
        eps = np.geomspace(lo, hi, points)
        d = np.array(
            [gate_infidelity(seq, target, ErrorModel(epsilon=e), align, engine) for e in eps]
        )
        if np.all(d > NOISE_FLOOR):
            slope = float(np.polyfit(np.log(eps), np.log(d), 1)[0])
            if (lo, hi) != window:
                logger.info("%s: fitting window moved to [%.3g, %.3g]", seq.label, lo, hi)
            logger.debug("%s: robustness slope %.4f", seq.label, slope)
            return slope
        lo *= _WINDOW_SHIFT
        hi = lo * ratio
    raise DegenerateCurve(
        f"{seq.label}: infidelity stays below {NOISE_FLOOR:g} on every fitting window up to ε = "
        f"{_WINDOW_CAP:g}"
    )
