"""Infidelity sweeps over pulse-area error and detuning, and their CSV form.

Sweep results are pandas DataFrames with columns ``epsilon``, ``delta_t``, ``infidelity``
sorted by ε then ΔT. Nothing here depends on plotting or the CLI.
"""

from __future__ import annotations

import io
import itertools
import logging
from collections.abc import Sequence
from pathlib import Path

import numpy as np
import numpy.typing as npt
import pandas as pd
from pydantic import BaseModel, ConfigDict, Field
from tqdm.contrib.concurrent import thread_map

from src.config import CSV_COLUMNS, SWEEP_WORKERS
from src.errors import ParseError
from src.models.error_model import ErrorModel
from src.models.sequence import CompositeSequence
from src.models.target import Alignment, GateTarget
from src.physics.oracle import IntegratorConfig
from src.utils.analysis import Engine, check_engine, gate_infidelity

logger = logging.getLogger(__name__)

_FLOAT_FORMAT = "%.12g"


class SweepMetadata(BaseModel):
    """Provenance of a sweep, written next to the CSV as JSON."""

    model_config = ConfigDict(frozen=True)

    label: str
    scheme: str
    shape: str
    target: str
    alignment: Alignment
    engine: Engine
    assumptions: dict[str, str] = Field(default_factory=dict)


class SweepResult(BaseModel):
    """Sweep rows plus metadata."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    frame: pd.DataFrame
    metadata: SweepMetadata | None = None

    @property
    def rows(self) -> list[tuple[float, float, float]]:
        return list(self.frame.itertuples(index=False, name=None))

    def at_detuning(self, delta_t: float) -> pd.DataFrame:
        return self.frame[np.isclose(self.frame["delta_t"], delta_t, rtol=0.0, atol=1e-12)]


def epsilon_grid(start: float, stop: float, step: float) -> npt.NDArray[np.float64]:
    """Inclusive grid start, start+step, …, stop (rounded to 12 decimals).

    Raises:
        ValueError: If the step is not positive or the range is reversed.
    """
    if step <= 0:
        raise ValueError(f"Grid step must be positive, got {step!r}")
    if stop < start:
        raise ValueError(f"Grid end {stop!r} lies below its start {start!r}")
    count = int(round((stop - start) / step)) + 1
    return np.round(start + step * np.arange(count), 12) + 0.0


def sweep(
    seq: CompositeSequence,
    target: GateTarget,
    epsilons: Sequence[float],
    delta_ts: Sequence[float] = (),
    engine: Engine = Engine.ANALYTIC,
    *,
    align: Alignment = Alignment.NONE,
    cfg: IntegratorConfig | None = None,
    workers: int | None = None,
    metadata: SweepMetadata | None = None,
) -> SweepResult:
    """Evaluate D at every (ε, ΔT) grid point.

    An empty detuning grid means resonance only. Points are spread over a thread pool; the
    returned rows are ordered by ε then ΔT regardless of scheduling.

    Raises:
        ValueError: If the ε grid is empty.
        EngineMismatch: If the analytic engine is asked for shaped detuned pulses.
    """
    if len(epsilons) == 0:
        raise ValueError("The ε grid must not be empty")
    dts = sorted(set(float(d) for d in delta_ts)) or [0.0]
    eps = sorted(set(float(e) for e in epsilons))
    check_engine(seq, engine, dts)
    duration = seq.pairs[0].duration
    points = list(itertools.product(eps, dts))

    def evaluate(point: tuple[float, float]) -> float:
        epsilon, delta_t = point
        em = ErrorModel(epsilon=epsilon, detuning=delta_t / duration)
        return gate_infidelity(seq, target, em, align, engine, cfg)

    logger.info(
        "Sweeping %s: %d ε × %d ΔT points, engine=%s", seq.label, len(eps), len(dts), engine.value
    )
    values = thread_map(
        evaluate,
        points,
        max_workers=workers or SWEEP_WORKERS,
        desc=seq.label,
        disable=not logger.isEnabledFor(logging.INFO),
    )

    frame = pd.DataFrame(
        [(e, d, v) for (e, d), v in zip(points, values, strict=True)], columns=list(CSV_COLUMNS)
    )
    logger.info("Sweep of %s done, max D = %.3e", seq.label, frame["infidelity"].max())
    return SweepResult(frame=frame, metadata=metadata)


def format_csv(result: SweepResult) -> str:
    buffer = io.StringIO()
    result.frame.to_csv(buffer, index=False, float_format=_FLOAT_FORMAT, lineterminator="\n")
    return buffer.getvalue()


def write_csv(result: SweepResult, path: Path) -> Path:
    """Write the CSV (and a ``.meta.json`` sidecar when metadata is present)."""
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(format_csv(result), encoding="utf-8", newline="")
    if result.metadata is not None:
        metadata_path(path).write_text(result.metadata.model_dump_json(indent=2), encoding="utf-8")
    logger.info("Wrote %d rows to %s", len(result.frame), path)
    return path


def metadata_path(path: Path) -> Path:
    return path.with_name(path.name + ".meta.json")


def parse_csv(text: str) -> SweepResult:
    """Parse CSV text produced by :func:`format_csv`.

    Raises:
        ParseError: If the header or values are not a sweep table.
    """
    try:
        frame = pd.read_csv(io.StringIO(text), dtype=float)
    except (ValueError, pd.errors.ParserError, pd.errors.EmptyDataError) as exc:
        raise ParseError(f"Not a sweep CSV: {exc}") from exc
    if tuple(frame.columns) != CSV_COLUMNS:
        raise ParseError(f"Expected header {','.join(CSV_COLUMNS)}, got {','.join(frame.columns)}")
    return SweepResult(frame=frame)


def read_csv(path: Path) -> SweepResult:
    """Read a sweep CSV and its metadata sidecar, if any."""
    result = parse_csv(path.read_text(encoding="utf-8"))
    meta = metadata_path(path)
    if meta.exists():
        metadata = SweepMetadata.model_validate_json(meta.read_text(encoding="utf-8"))
        result = result.model_copy(update={"metadata": metadata})
    return result


def robust_half_width(result: SweepResult, threshold: float, delta_t: float = 0.0) -> float:
    """Half-width of the ε interval around 0 on which D stays below ``threshold``.

    Each side is walked outward from ε = 0 to the first grid point with D ≥ threshold and the
    crossing is linearly interpolated; the narrower side wins. A side that never crosses
    contributes its outermost |ε|.
    """
    frame = result.at_detuning(delta_t).sort_values("epsilon")
    if frame.empty:
        raise ValueError(f"No rows at ΔT = {delta_t!r}")
    eps = frame["epsilon"].to_numpy()
    d = frame["infidelity"].to_numpy()

    def side(mask: npt.NDArray[np.bool_]) -> float:
        x, y = np.abs(eps[mask]), d[mask]
        order = np.argsort(x)
        x, y = x[order], y[order]
        if x.size == 0:
            return 0.0
        above = np.nonzero(y >= threshold)[0]
        if above.size == 0:
            return float(x[-1])
        i = int(above[0])
        if i == 0:
            return float(x[0])
        x0, x1, y0, y1 = x[i - 1], x[i], y[i - 1], y[i]
        return float(x0 + (threshold - y0) * (x1 - x0) / (y1 - y0))

    return min(side(eps >= 0), side(eps <= 0))
