"""Shared pytest fixtures for all tests."""

import json
import math
from pathlib import Path

import pytest

from src.catalog.registry import CatalogEntry, resolve
from src.models.pulse_pair import PulsePair
from src.models.shape import PulseShape
from src.physics.oracle import IntegratorConfig


@pytest.fixture
def rect() -> PulseShape:
    """Unit-duration rectangular envelope."""
    return PulseShape.rectangular()


@pytest.fixture
def gaussian() -> PulseShape:
    """Unit-duration Gaussian envelope with the default width."""
    return PulseShape.gaussian()


@pytest.fixture
def x_pair(rect: PulseShape) -> PulsePair:
    """Single MS pair with the X-gate couplings (RMS area π)."""
    return PulsePair(area0=math.pi / math.sqrt(2), area1=-math.pi / math.sqrt(2), shape=rect)


@pytest.fixture
def x6() -> CatalogEntry:
    return resolve("X6")


@pytest.fixture
def fast_oracle() -> IntegratorConfig:
    """Coarse integrator settings for checks that do not need 1e-8 agreement."""
    return IntegratorConfig(steps_per_pulse=400, check_convergence=False)


@pytest.fixture
def sequence_file(tmp_path: Path) -> Path:
    """A JSON sequence file describing the two-pair X gate with pi-literal areas."""
    path = tmp_path / "x2.json"
    path.write_text(
        json.dumps(
            {
                "label": "file-x2",
                "scheme": "ms",
                "shape": {"kind": "rectangular", "duration": 1},
                "pairs": [
                    {"area0": "pi/sqrt(2)", "area1": "-pi/sqrt(2)", "phase0": 0, "phase1": 0},
                    {"area0": "pi/sqrt(2)", "area1": "-pi/sqrt(2)", "phase0": 0, "phase1": 0},
                ],
                "target": {"kind": "x"},
            }
        ),
        encoding="utf-8",
    )
    return path
