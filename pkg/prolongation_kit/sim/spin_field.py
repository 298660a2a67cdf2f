from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field, replace
from typing import Optional, Sequence

import numpy as np

from prolongation_kit.errors.exceptions import ConstraintViolationError
from prolongation_kit.scalar.params import ModelParams
from prolongation_kit.settings.constants import InitKind

logger = logging.getLogger(__name__)

MIN_GRID = 8
DEFAULT_LENGTH = 2 * math.pi


@dataclass(frozen=True)
class PlaneWave:
    """Exact precessing wave; (sin, cos) in the compact case, (sinh, cosh) otherwise."""

    u: float
    k1: float
    k2: float
    compact: bool = True

    @property
    def omega(self) -> float:
        base = math.cos(self.u) if self.compact else math.cosh(self.u)
        return -(self.k1**2 + self.k2**2) * base

    def _amplitudes(self) -> tuple[float, float]:
        if self.compact:
            return math.sin(self.u), math.cos(self.u)
        return math.sinh(self.u), math.cosh(self.u)

    def phase(self, x: np.ndarray, y: np.ndarray, t: float) -> np.ndarray:
        return self.k1 * x + self.k2 * y + self.omega * t

    def evaluate(self, x: np.ndarray, y: np.ndarray, t: float) -> np.ndarray:
        radial, axial = self._amplitudes()
        phi = self.phase(x, y, t)
        return np.stack([radial * np.cos(phi), radial * np.sin(phi), np.full_like(phi, axial)])

    def time_derivative(self, x: np.ndarray, y: np.ndarray, t: float) -> np.ndarray:
        radial, _ = self._amplitudes()
        phi = self.phase(x, y, t)
        return np.stack([-radial * self.omega * np.sin(phi), radial * self.omega * np.cos(phi), np.zeros_like(phi)])


@dataclass(frozen=True)
class SpinField:
    data: np.ndarray
    params: ModelParams
    h: float
    t: float = 0.0
    steps: int = 0
    wave: Optional[PlaneWave] = field(default=None, compare=False)

    @property
    def nx(self) -> int:
        return self.data.shape[1]

    @property
    def ny(self) -> int:
        return self.data.shape[2]

    def coordinates(self) -> tuple[np.ndarray, np.ndarray]:
        xs = np.arange(self.nx) * self.h
        ys = np.arange(self.ny) * self.h
        return np.meshgrid(xs, ys, indexing="ij")

    def with_data(self, data: np.ndarray, dt: float = 0.0) -> "SpinField":
        return replace(self, data=data, t=self.t + dt, steps=self.steps + (1 if dt else 0))

    def constraint_defect(self) -> float:
        return float(np.max(np.abs(quadratic_form(self.data, self.params) - self.params.gamma2)))


def quadratic_form(data: np.ndarray, params: ModelParams) -> np.ndarray:
    """(ΓS)·S at every node."""
    return data[0] ** 2 + data[1] ** 2 + params.gamma2 * data[2] ** 2


def project(data: np.ndarray, params: ModelParams) -> np.ndarray:
    """Rescale every node onto (ΓS)·S = γ², on the upper sheet when γ² = −1."""
    ratio = quadratic_form(data, params) / params.gamma2
    if np.any(ratio <= 0) or (not params.compact and np.any(data[2] <= 0)):
        raise ConstraintViolationError("Cannot project: node off the admissible sheet")
    return data / np.sqrt(ratio)


def init_field(
    kind: InitKind | str,
    params: ModelParams,
    nx: int = 32,
    ny: Optional[int] = None,
    length: float = DEFAULT_LENGTH,
    vector: Sequence[float] = (0.0, 0.0, 1.0),
    u: float = 0.5,
    modes: tuple[int, int] = (1, 1),
    seed: int = 0,
) -> SpinField:
    kind = InitKind(kind)
    ny = nx if ny is None else ny
    if nx < MIN_GRID or ny < MIN_GRID:
        raise ValueError(f"Grid sizes must be at least {MIN_GRID}, got {nx}x{ny}")
    h = length / nx
    blank = SpinField(np.zeros((3, nx, ny)), params, h)
    x, y = blank.coordinates()

    wave = None
    if kind == InitKind.CONSTANT:
        s = np.asarray(vector, dtype=float)
        if not params.compact and s[2] ** 2 <= s[0] ** 2 + s[1] ** 2:
            raise ConstraintViolationError(f"S3^2 must exceed S1^2 + S2^2 on the hyperboloid, got {tuple(s)}")
        data = np.broadcast_to(s[:, None, None], (3, nx, ny)).copy()
    elif kind == InitKind.PLANE_WAVE:
        k1 = 2 * math.pi * modes[0] / length
        k2 = 2 * math.pi * modes[1] / (ny * h)
        wave = PlaneWave(u, k1, k2, params.compact)
        data = wave.evaluate(x, y, 0.0)
    else:
        rng = np.random.default_rng(seed)
        data = np.zeros((3, nx, ny))
        for k in range(3):
            for m1, m2 in ((1, 0), (0, 1), (1, 1)):
                a, b = rng.normal(scale=0.3, size=2)
                phi = 2 * math.pi * (m1 * x / length + m2 * y / (ny * h))
                data[k] += a * np.cos(phi) + b * np.sin(phi)
        data[2] += 1.0 if params.compact else 2.0 + np.sqrt(data[0] ** 2 + data[1] ** 2)
    result = SpinField(project(data, params), params, h, wave=wave)
    logger.info("Campo %s inicializado en malla %dx%d (h=%.4g)", kind.value, nx, ny, h)
    return result
