from __future__ import annotations

import logging
import math

import numpy as np

from prolongation_kit.errors.exceptions import NumericalBlowupError, StabilityError
from prolongation_kit.scalar.params import ModelParams
from prolongation_kit.sim.spin_field import SpinField, project

logger = logging.getLogger(__name__)


def laplacian(data: np.ndarray, h: float) -> np.ndarray:
    """Periodic 5-point Laplacian over the two grid axes."""
    return (
        np.roll(data, 1, axis=1)
        + np.roll(data, -1, axis=1)
        + np.roll(data, 1, axis=2)
        + np.roll(data, -1, axis=2)
        - 4 * data
    ) / h**2


def inverse_weights(params: ModelParams) -> np.ndarray:
    return np.array([1.0, 1.0, 1.0 / params.gamma2])[:, None, None]


def rhs(data: np.ndarray, h: float, params: ModelParams) -> np.ndarray:
    """S_t = Γ⁻¹ (S × ΔS)."""
    return inverse_weights(params) * np.cross(data, laplacian(data, h), axis=0)


def stability_bound(h: float) -> float:
    return h**2 / 4


def step(f: SpinField, dt: float) -> SpinField:
    bound = stability_bound(f.h)
    if abs(dt) > bound * (1 + 1e-12):
        raise StabilityError(dt, bound)
    s = f.data
    k1 = rhs(s, f.h, f.params)
    k2 = rhs(s + 0.5 * dt * k1, f.h, f.params)
    k3 = rhs(s + 0.5 * dt * k2, f.h, f.params)
    k4 = rhs(s + dt * k3, f.h, f.params)
    advanced = s + dt / 6 * (k1 + 2 * k2 + 2 * k3 + k4)
    if not np.all(np.isfinite(advanced)):
        raise NumericalBlowupError(f.steps + 1)
    return f.with_data(project(advanced, f.params), dt)


def integrate(f: SpinField, final_time: float, safety: float = 1.0) -> SpinField:
    """Advance to ``final_time`` with equal steps no larger than safety·h²/4."""
    span = final_time - f.t
    if span <= 0:
        return f
    count = max(1, math.ceil(span / (safety * stability_bound(f.h))))
    dt = span / count
    for _ in range(count):
        f = step(f, dt)
    logger.info("Integrados %d pasos hasta t=%.4g", count, f.t)
    return f
