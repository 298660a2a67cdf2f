from .convergence import ConvergenceReport, MonitorOrder, convergence_study, fit_order
from .integrator import integrate, laplacian, rhs, stability_bound, step
from .residuals import (
    MonitorResidual,
    ResidualReport,
    constraint_monitor,
    measure_residuals,
    numerical_jets,
    pde_monitors,
)
from .snapshots import read_snapshot, write_snapshot
from .spin_field import PlaneWave, SpinField, init_field, project, quadratic_form

__all__ = [
    "ConvergenceReport",
    "MonitorOrder",
    "convergence_study",
    "fit_order",
    "integrate",
    "laplacian",
    "rhs",
    "stability_bound",
    "step",
    "MonitorResidual",
    "ResidualReport",
    "constraint_monitor",
    "measure_residuals",
    "numerical_jets",
    "pde_monitors",
    "read_snapshot",
    "write_snapshot",
    "PlaneWave",
    "SpinField",
    "init_field",
    "project",
    "quadratic_form",
]
