"""Text reports: catalog listing, single-shot propagation, oracle cross-check, robustness order."""

from __future__ import annotations

import logging
import math

import numpy as np

from src.catalog.registry import CatalogEntry, catalog
from src.components.common import CommandResult, Status, format_matrix
from src.config import ORACLE_MATCH_TOL
from src.errors import DegenerateCurve, EngineMismatch
from src.models.error_model import ErrorModel
from src.models.shape import PulseShape
from src.physics.analytic import sequence_propagator
from src.physics.linalg import unitarity_defect
from src.physics.oracle import IntegratorConfig, integrate
from src.utils.analysis import Engine, infidelity, propagate, robustness_order
from src.utils.expressions import format_pi_multiple

logger = logging.getLogger(__name__)

_ORDER_TOLERANCE = 0.05


def format_area(value: float) -> str:
    """Pulse area as an integer multiple of π, √2π or π/√2, else via :func:`format_pi_multiple`."""
    ratio = value / math.pi
    for factor, unit in ((1.0, "π"), (1 / math.sqrt(2), "√2π"), (math.sqrt(2), "π/√2")):
        k = round(ratio * factor)
        if k != 0 and abs(k - ratio * factor) < 1e-9:
            head = {1: "", -1: "-"}.get(k, str(k))
            return f"{head}{unit}"
    return format_pi_multiple(value)


def _entry_lines(entry: CatalogEntry) -> list[str]:
    seq = entry.sequence
    lines = [
        f"{entry.label:<16} scheme={seq.scheme.value:<8} pairs={len(seq):<3} "
        f"total_rms_area={format_area(seq.total_rms_area)} "
        f"total_leg_area={format_area(sum(abs(p.area0) for p in seq.pairs))} "
        f"target={entry.target.describe()} align={entry.alignment.value}"
    ]
    legs = sorted({(format_area(p.area0), format_area(p.area1)) for p in seq.pairs})
    lines.append("    legs:   " + ", ".join(f"({a0}, {a1})" for a0, a1 in legs))
    lines.append("    phase0: " + " ".join(format_pi_multiple(p.phase0) for p in seq.pairs))
    if any(p.phase1 != 0.0 for p in seq.pairs):
        lines.append("    phase1: " + " ".join(format_pi_multiple(p.phase1) for p in seq.pairs))
    if seq.detuning:
        lines.append(f"    detuning: {seq.detuning:.12g}/T")
    if entry.note:
        lines.append(f"    note: {entry.note}")
    return lines


def cmd_catalog(
    *, name_filter: str = "", delta_t: float = 0.0, shape: PulseShape | None = None
) -> CommandResult:
    """List every catalog entry matching ``name_filter``."""
    entries = catalog(delta_t=delta_t, shape=shape, name_filter=name_filter)
    result = CommandResult(command="catalog", fields={"entries": str(len(entries))})
    for entry in entries:
        result.lines.extend(_entry_lines(entry))
    if not entries:
        result.lines.append(f"No catalog label matches '{name_filter}'")
    return result


def cmd_propagate(
    entry: CatalogEntry,
    *,
    epsilon: float = 0.0,
    delta_t: float = 0.0,
    engine: Engine = Engine.ANALYTIC,
    cfg: IntegratorConfig | None = None,
) -> CommandResult:
    """Print the 3×3 propagator and D against the entry's target."""
    seq = entry.sequence
    em = ErrorModel(epsilon=epsilon, detuning=delta_t / seq.pairs[0].duration)
    u = propagate(seq, em, engine, cfg)
    d = infidelity(u, entry.target, entry.alignment)
    lines = [
        f"sequence {entry.label}: {len(seq)} pairs, scheme {seq.scheme.value}, "
        f"shape {seq.pairs[0].shape.describe()}",
        f"epsilon={epsilon:.12g} delta_t={delta_t:.12g} engine={engine.value}",
        *format_matrix(u),
        f"D = {d:.12g} (target {entry.target.describe()}, align {entry.alignment.value})",
    ]
    return CommandResult(
        command="propagate",
        lines=lines,
        fields={
            "label": entry.label,
            "engine": engine.value,
            "D": f"{d:.6e}",
            "unitarity_defect": f"{unitarity_defect(u):.3e}",
        },
    )


def cmd_oracle_check(
    entry: CatalogEntry,
    *,
    epsilon: float = 0.0,
    delta_t: float = 0.0,
    cfg: IntegratorConfig | None = None,
    tolerance: float = ORACLE_MATCH_TOL,
) -> CommandResult:
    """Compare the closed-form propagator with the integrated one."""
    seq = entry.sequence
    cfg = cfg or IntegratorConfig()
    em = ErrorModel(epsilon=epsilon, detuning=delta_t / seq.pairs[0].duration)
    result = CommandResult(
        command="oracle-check",
        lines=[f"sequence {entry.label}: epsilon={epsilon:.12g} delta_t={delta_t:.12g}"],
        fields={"label": entry.label, "steps": str(cfg.steps_per_pulse)},
    )
    oracle = integrate(seq, em, cfg)
    d = infidelity(oracle, entry.target, entry.alignment)
    result.lines.append(f"oracle D = {d:.12g}")
    try:
        analytic = sequence_propagator(seq, em)
    except EngineMismatch:
        result.lines.append("analytic path unavailable; oracle-only")
        result.fields["check"] = "oracle-only"
        result.fields["D"] = f"{d:.6e}"
        return result

    residual = float(np.max(np.abs(analytic - oracle)))
    passed = residual <= tolerance
    result.lines.append(
        f"max |analytic - oracle| = {residual:.3e} ({'pass' if passed else 'FAIL'} at "
        f"{tolerance:g})"
    )
    result.status = Status.PASS if passed else Status.FAIL
    result.fields["residual"] = f"{residual:.3e}"
    result.fields["D"] = f"{d:.6e}"
    return result


def cmd_order(
    entry: CatalogEntry,
    *,
    engine: Engine = Engine.ANALYTIC,
    expected_n: int | None = None,
) -> CommandResult:
    """Fit the log-log slope of D(ε); checked against 2N when N is known."""
    n = expected_n if expected_n is not None else entry.order
    result = CommandResult(command="order", fields={"label": entry.label})
    try:
        slope = robustness_order(entry.sequence, entry.target, entry.alignment, engine)
    except DegenerateCurve as exc:
        result.lines.append(str(exc))
        result.status = Status.FAIL
        return result

    result.lines.append(f"{entry.label}: slope of log D vs log ε = {slope:.4f}")
    result.fields["slope"] = f"{slope:.4f}"
    if n is None:
        result.lines.append("no expected order for this sequence; slope reported only")
        return result
    expected = 2 * n
    passed = abs(slope - expected) <= _ORDER_TOLERANCE * expected
    result.lines.append(
        f"expected {expected} ± {_ORDER_TOLERANCE * expected:.2g}: {'pass' if passed else 'FAIL'}"
    )
    result.fields["expected"] = str(expected)
    result.status = Status.PASS if passed else Status.FAIL
    return result
