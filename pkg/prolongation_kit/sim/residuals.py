from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Mapping, Optional

import numpy as np
import sympy

from prolongation_kit.errors.exceptions import JetOrderError
from prolongation_kit.scalar.exact_scalar import LAMBDA_SYMBOL
from prolongation_kit.scalar.field_expr import FieldExpr, cross, dot
from prolongation_kit.scalar.jet import JetSymbol, field as jet_field, spin
from prolongation_kit.scalar.params import ModelParams
from prolongation_kit.sim.integrator import stability_bound, step
from prolongation_kit.sim.spin_field import SpinField
from prolongation_kit.spectral.matrix2 import Matrix2

logger = logging.getLogger(__name__)

PATH_TOLERANCE = 1e-12


@dataclass(frozen=True)
class MonitorResidual:
    max_abs: float
    mean_abs: float
    paths_agree: bool


@dataclass
class ResidualReport:
    nx: int
    ny: int
    h: float
    t: float
    monitors: dict[str, MonitorResidual] = field(default_factory=dict)

    @property
    def paths_agree(self) -> bool:
        return all(m.paths_agree for m in self.monitors.values())


def pde_monitors(params: ModelParams) -> dict[str, FieldExpr]:
    """Γ_k S_k_t − (S × (S_xx + S_yy))_k."""
    S = tuple(FieldExpr.symbol(s) for s in spin(""))
    laplacian = tuple(FieldExpr.symbol(a) + FieldExpr.symbol(b) for a, b in zip(spin("xx"), spin("yy")))
    rhs = cross(S, laplacian)
    return {
        f"pde_{k}": FieldExpr.symbol(jet_field(k, "t")) * params.weights[k - 1] - rhs[k - 1] for k in (1, 2, 3)
    }


def constraint_monitor(params: ModelParams) -> dict[str, FieldExpr]:
    S = [FieldExpr.symbol(s) for s in spin("")]
    weighted = [s * w for s, w in zip(S, params.weights)]
    return {"constraint": dot(weighted, S) - params.gamma2}


def _diff(data: np.ndarray, axis: int, h: float) -> np.ndarray:
    return (np.roll(data, -1, axis=axis) - np.roll(data, 1, axis=axis)) / (2 * h)


def _second(data: np.ndarray, axis: int, h: float) -> np.ndarray:
    return (np.roll(data, -1, axis=axis) - 2 * data + np.roll(data, 1, axis=axis)) / h**2


def numerical_jets(f: SpinField, time_derivative: Optional[np.ndarray] = None) -> dict[JetSymbol, np.ndarray]:
    """Centered-difference jets up to second order; S_t from two integrator steps of ±δ unless supplied."""
    s, h = f.data, f.h
    if time_derivative is None:
        delta = stability_bound(h) / 8
        time_derivative = (step(f, delta).data - step(f, -delta).data) / (2 * delta)
    jets: dict[JetSymbol, np.ndarray] = {}
    for k in range(3):
        component, s_t = s[k], time_derivative[k]
        values = {
            "": component,
            "x": _diff(component, 0, h),
            "y": _diff(component, 1, h),
            "t": s_t,
            "xx": _second(component, 0, h),
            "yy": _second(component, 1, h),
            "xy": _diff(_diff(component, 0, h), 1, h),
            "xt": _diff(s_t, 0, h),
            "yt": _diff(s_t, 1, h),
        }
        for derivs, value in values.items():
            jets[jet_field(k + 1, derivs)] = value
    return jets


def scalar_parts(expr: FieldExpr) -> dict[str, FieldExpr]:
    """Split matrix-valued monitors entrywise; scalar monitors pass through."""
    if expr.algebra is not Matrix2:
        return {"": expr}
    names = ("11", "12", "21", "22")
    return {name: expr.map_coefficients(lambda m, i=i: m.entries[i]) for i, name in enumerate(names)}


SUPPORTED_DERIVS = frozenset({"", "x", "y", "t", "xx", "yy", "xy", "xt", "yt"})


def _check_symbols(expr: FieldExpr) -> None:
    for symbol in expr.symbols():
        if symbol.kind != "field" or symbol.derivs not in SUPPORTED_DERIVS:
            raise JetOrderError(symbol.name)


def compiled_evaluate(expr: FieldExpr, jets: Mapping[JetSymbol, np.ndarray], lam: complex) -> np.ndarray:
    symbols = sorted(expr.symbols(), key=lambda s: s.sort_key())
    args = [sympy.Symbol(s.name) for s in symbols] + [LAMBDA_SYMBOL]
    fn = sympy.lambdify(args, expr.to_sympy(), modules="numpy", dummify=True)
    shape = next(iter(jets.values())).shape
    return np.broadcast_to(np.asarray(fn(*[jets[s] for s in symbols], lam)), shape)


def measure_residuals(
    f: SpinField,
    monitors: Mapping[str, FieldExpr],
    time_derivative: Optional[np.ndarray] = None,
    lam: complex = 1.0,
) -> ResidualReport:
    for expr in monitors.values():
        _check_symbols(expr)
    jets = numerical_jets(f, time_derivative)
    shape = (f.nx, f.ny)
    report = ResidualReport(f.nx, f.ny, f.h, f.t)
    for name, expr in monitors.items():
        magnitude = np.zeros(shape)
        agree = True
        for part in scalar_parts(expr).values():
            direct = np.broadcast_to(np.asarray(part.evaluate(jets, lam)), shape)
            compiled = compiled_evaluate(part, jets, lam)
            scale = max(1.0, float(np.max(np.abs(direct))))
            if float(np.max(np.abs(direct - compiled))) > PATH_TOLERANCE * scale:
                agree = False
                logger.warning("Las dos evaluaciones de %s difieren", name)
            magnitude = np.maximum(magnitude, np.abs(direct))
        report.monitors[name] = MonitorResidual(float(np.max(magnitude)), float(np.mean(magnitude)), agree)
    return report
