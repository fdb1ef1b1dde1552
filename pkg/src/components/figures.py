"""Infidelity curves as Plotly figures and standalone plot scripts."""

from __future__ import annotations

import logging
import math
from pathlib import Path

import pandas as pd
import plotly.express as px
import plotly.graph_objects as go

from src.utils.sweeps import SweepResult

logger = logging.getLogger(__name__)

Y_RANGE = (1e-8, 2.0)
_LOG_FLOOR = 1e-16


def curve_frame(results: dict[str, SweepResult]) -> pd.DataFrame:
    """Stack named sweeps into one long frame with ``curve`` and ``delta_t`` columns.

    Exact zeros are lifted to a tiny floor so they stay on the log axis.
    """
    frames = []
    for name, result in results.items():
        df = result.frame.copy()
        df["curve"] = name
        frames.append(df)
    if not frames:
        raise ValueError("No sweeps to plot")
    df = pd.concat(frames, ignore_index=True)
    df["infidelity"] = df["infidelity"].clip(lower=_LOG_FLOOR)
    df["delta_t"] = df["delta_t"].map(lambda v: f"ΔT={v:g}")
    return df


def build_figure(results: dict[str, SweepResult], title: str = "") -> go.Figure:
    """Log-scale D(ε) curves, one line per sweep and detuning."""
    df = curve_frame(results)
    fig = px.line(
        df,
        x="epsilon",
        y="infidelity",
        color="curve",
        line_dash="delta_t",
        log_y=True,
        labels={"epsilon": "Pulse area error ε", "infidelity": "Infidelity D", "curve": "Sequence"},
        title=title or None,
    )
    fig.update_yaxes(range=[math.log10(Y_RANGE[0]), math.log10(Y_RANGE[1])])
    fig.update_layout(hovermode="x unified")
    return fig


def write_html(fig: go.Figure, path: Path) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.write_html(path, include_plotlyjs="cdn")
    logger.info("Wrote figure to %s", path)
    return path


_SCRIPT = '''"""Plot infidelity curves from sweep CSVs (generated, edit freely)."""

import math

import pandas as pd
import plotly.graph_objects as go

CSV_FILES = {files!r}

fig = go.Figure()
for name, path in CSV_FILES.items():
    df = pd.read_csv(path)
    for delta_t, group in df.groupby("delta_t"):
        fig.add_trace(
            go.Scatter(
                x=group["epsilon"],
                y=group["infidelity"].clip(lower={floor!r}),
                mode="lines",
                name=f"{{name}} (ΔT={{delta_t:g}})",
            )
        )
fig.update_layout(
    title={title!r},
    xaxis_title="Pulse area error ε",
    yaxis_title="Infidelity D",
    yaxis={{"type": "log", "range": [math.log10({lo!r}), math.log10({hi!r})]}},
)
fig.show()
'''


def plot_script(csv_files: dict[str, Path], title: str = "") -> str:
    """Source of a standalone script that redraws the given CSVs on a log D axis."""
    return _SCRIPT.format(
        files={name: str(path) for name, path in csv_files.items()},
        floor=_LOG_FLOOR,
        title=title,
        lo=Y_RANGE[0],
        hi=Y_RANGE[1],
    )


def write_plot_script(csv_files: dict[str, Path], path: Path, title: str = "") -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(plot_script(csv_files, title), encoding="utf-8")
    logger.info("Wrote plot script to %s", path)
    return path
