from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from prolongation_kit.scalar.params import ModelParams
from prolongation_kit.settings.constants import InitKind
from prolongation_kit.sim.integrator import integrate
from prolongation_kit.sim.residuals import constraint_monitor, measure_residuals, pde_monitors
from prolongation_kit.sim.spin_field import SpinField, init_field

logger = logging.getLogger(__name__)

ROUNDING_FLOOR = 1e-11
FLOOR = "floor"
ORDER_WINDOW = (1.8, 2.2)
REFERENCE_KINDS = (InitKind.CONSTANT, InitKind.PLANE_WAVE)


@dataclass
class MonitorOrder:
    errors: list[float]
    slope: Optional[float]
    label: str
    monotone: bool

    @property
    def in_window(self) -> bool:
        low, high = ORDER_WINDOW
        return self.slope is None or low <= self.slope <= high

    @property
    def passed(self) -> bool:
        return self.monotone and self.in_window


@dataclass
class ConvergenceReport:
    kind: InitKind
    grids: list[int]
    spacings: list[float]
    monitors: dict[str, MonitorOrder] = field(default_factory=dict)

    @property
    def flagged(self) -> list[str]:
        return [name for name, order in self.monitors.items() if not order.passed]


def fit_order(spacings: Sequence[float], errors: Sequence[float]) -> MonitorOrder:
    errors = [float(e) for e in errors]
    if max(errors) <= ROUNDING_FLOOR:
        return MonitorOrder(errors, None, FLOOR, True)
    monotone = all(b < a for a, b in zip(errors, errors[1:]))
    slope = float(np.polyfit(np.log(spacings), np.log(np.maximum(errors, np.finfo(float).tiny)), 1)[0])
    if not monotone:
        logger.warning("Errores no monótonos: %s", errors)
    return MonitorOrder(errors, slope, f"{slope:.3f}", monotone)


def _solution_error(f: SpinField, final_time: float, safety: float) -> tuple[SpinField, float]:
    advanced = integrate(f, final_time, safety)
    if f.wave is None:
        exact = f.data
    else:
        x, y = f.coordinates()
        exact = f.wave.evaluate(x, y, advanced.t)
    return advanced, float(np.max(np.abs(advanced.data - exact)))


def convergence_study(
    kind: InitKind | str,
    grids: Sequence[int],
    params: Optional[ModelParams] = None,
    final_time: float = 0.1,
    safety: float = 0.5,
    seed: int = 0,
) -> ConvergenceReport:
    """Errors per monitor over grids refined by 2, with the least-squares slope of log error in log h."""
    kind = InitKind(kind)
    params = params or ModelParams()
    grids = list(grids)
    if len(grids) < 3:
        raise ValueError("A convergence study needs at least three grids")
    if any(b != 2 * a for a, b in zip(grids, grids[1:])):
        raise ValueError(f"Grids must refine by a factor of 2, got {grids}")

    errors: dict[str, list[float]] = {"solution": [], "pde": [], "constraint": []}
    if kind not in REFERENCE_KINDS:
        logger.info("Sin solución de referencia para %s; se omite el monitor de solución", kind.value)
        del errors["solution"]
    spacings = []
    for n in grids:
        f = init_field(kind, params, nx=n, seed=seed)
        spacings.append(f.h)
        time_derivative = None
        if f.wave is not None:
            x, y = f.coordinates()
            time_derivative = f.wave.time_derivative(x, y, f.t)
        monitors = {**pde_monitors(params), **constraint_monitor(params)}
        report = measure_residuals(f, monitors, time_derivative)
        errors["pde"].append(max(report.monitors[f"pde_{k}"].max_abs for k in (1, 2, 3)))
        advanced, error = _solution_error(f, final_time, safety)
        if "solution" in errors:
            errors["solution"].append(error)
        errors["constraint"].append(advanced.constraint_defect())

    study = ConvergenceReport(kind, grids, spacings)
    for name, values in errors.items():
        study.monitors[name] = fit_order(spacings, values)
    logger.info("Estudio de convergencia %s: %s", kind.value, {k: v.label for k, v in study.monitors.items()})
    return study
