"""Pulse envelope shared by both legs of a Raman pair."""

from __future__ import annotations

import math
from enum import StrEnum
from functools import lru_cache
from typing import Annotated, Any

import numpy as np
import numpy.typing as npt
from pydantic import BaseModel, ConfigDict, Field, model_validator
from scipy import integrate

from src.config import GAUSSIAN_WIDTH

_SCALE_RTOL = 1e-12


class ShapeKind(StrEnum):
    RECTANGULAR = "rectangular"
    GAUSSIAN = "gaussian"


@lru_cache(maxsize=64)
def _gaussian_scale(duration: float, width: float) -> float:
    sigma = width * duration
    mid = 0.5 * duration
    area, _ = integrate.quad(
        lambda t: math.exp(-((t - mid) ** 2) / (2.0 * sigma**2)),
        0.0,
        duration,
        epsabs=1e-14,
        epsrel=1e-13,
    )
    return math.pi / area


class PulseShape(BaseModel):
    """Envelope f(t) on [0, T], normalized so that its integral equals π.

    The Rabi frequency of leg k is Ω_k(t) = (A_k/π)·f(t), so the pulse area of that leg is A_k
    whatever the shape.
    """

    model_config = ConfigDict(frozen=True)

    kind: ShapeKind = ShapeKind.RECTANGULAR
    duration: Annotated[float, Field(gt=0, allow_inf_nan=False)] = 1.0
    width: Annotated[float, Field(gt=0, allow_inf_nan=False)] | None = None
    scale: float | None = None

    @model_validator(mode="before")
    @classmethod
    def default_width(cls, data: Any) -> Any:
        """Gaussian shapes without an explicit width get the default one."""
        if isinstance(data, dict) and data.get("kind") in (ShapeKind.GAUSSIAN, "gaussian"):
            if data.get("width") is None:
                data = {**data, "width": GAUSSIAN_WIDTH}
        return data

    @model_validator(mode="after")
    def validate_width(self) -> PulseShape:
        """Rectangular shapes take no width; a given scale must be the normalization constant."""
        if self.kind is ShapeKind.RECTANGULAR and self.width is not None:
            raise ValueError("Rectangular shapes take no width")
        if self.scale is not None:
            expected = self._compute_scale()
            if not math.isclose(self.scale, expected, rel_tol=_SCALE_RTOL):
                raise ValueError(
                    f"Scale {self.scale!r} breaks the area-π normalization, expected {expected!r}"
                )
        return self

    @classmethod
    def rectangular(cls, duration: float = 1.0) -> PulseShape:
        return cls(kind=ShapeKind.RECTANGULAR, duration=duration).normalize()

    @classmethod
    def gaussian(cls, duration: float = 1.0, width: float = GAUSSIAN_WIDTH) -> PulseShape:
        return cls(kind=ShapeKind.GAUSSIAN, duration=duration, width=width).normalize()

    @property
    def is_rectangular(self) -> bool:
        return self.kind is ShapeKind.RECTANGULAR

    def _compute_scale(self) -> float:
        if self.kind is ShapeKind.RECTANGULAR:
            return math.pi / self.duration
        assert self.width is not None
        return _gaussian_scale(self.duration, self.width)

    def normalize(self) -> PulseShape:
        """Return the shape with its normalization constant fixed (idempotent)."""
        scale = self._compute_scale()
        if self.scale == scale:
            return self
        return self.model_copy(update={"scale": scale})

    def envelope(self, t: npt.ArrayLike) -> npt.NDArray[np.float64]:
        """Evaluate f(t); zero outside [0, T]."""
        t = np.asarray(t, dtype=np.float64)
        scale = self.scale if self.scale is not None else self._compute_scale()
        inside = (t >= 0.0) & (t <= self.duration)
        if self.kind is ShapeKind.RECTANGULAR:
            values = np.full_like(t, scale)
        else:
            assert self.width is not None
            sigma = self.width * self.duration
            values = scale * np.exp(-((t - 0.5 * self.duration) ** 2) / (2.0 * sigma**2))
        return np.where(inside, values, 0.0)

    def peak(self) -> float:
        """Largest value of f on [0, T]."""
        return float(self.envelope(0.5 * self.duration))

    def power(self) -> float:
        """∫₀ᵀ f(t)² dt."""
        if self.kind is ShapeKind.RECTANGULAR:
            return math.pi**2 / self.duration
        value, _ = integrate.quad(
            lambda t: float(self.envelope(t)) ** 2, 0.0, self.duration, epsabs=1e-13
        )
        return float(value)

    def describe(self) -> str:
        if self.kind is ShapeKind.RECTANGULAR:
            return f"rectangular(T={self.duration:g})"
        return f"gaussian(T={self.duration:g}, width={self.width:g})"
