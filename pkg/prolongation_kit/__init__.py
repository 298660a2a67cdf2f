from .cli.commands import run_command
from .cli.dsl import load_algebra, parse_algebra_dsl
from .errors.exceptions import UsageError, VerificationFailure, WorkbenchError
from .exterior.eds import build_eds, verify_eds_closed
from .liealg.closure import apply_closing_map, jacobi_closure
from .liealg.homomorphism import verify_homomorphism
from .liealg.isomorphism import find_relabeling_isomorphism
from .liealg.lie_element import LieElement, X
from .liealg.open_algebra import OpenAlgebra
from .liealg.sl2 import closing_map, sl2_quotient
from .prolong.constr import check_constr_relation
from .prolong.determining import derive_determining_equations
from .prolong.extraction import extract_open_algebra
from .prolong.solutions import build_reduction, general_solution, verify_solution_form
from .scalar.exact_scalar import ExactScalar
from .scalar.params import ModelParams
from .settings.workbench_settings import WorkbenchSettings
from .sim.convergence import convergence_study
from .sim.integrator import integrate, step
from .sim.residuals import measure_residuals
from .sim.spin_field import SpinField, init_field
from .spectral.connection import solve_connection
from .spectral.constraint import verify_fundamental_constraint
from .spectral.export import export_spectral_problem
from .spectral.pauli import pauli_rep

__all__ = [
    "run_command",
    "load_algebra",
    "parse_algebra_dsl",
    "UsageError",
    "VerificationFailure",
    "WorkbenchError",
    "build_eds",
    "verify_eds_closed",
    "apply_closing_map",
    "jacobi_closure",
    "verify_homomorphism",
    "find_relabeling_isomorphism",
    "LieElement",
    "X",
    "OpenAlgebra",
    "closing_map",
    "sl2_quotient",
    "check_constr_relation",
    "derive_determining_equations",
    "extract_open_algebra",
    "build_reduction",
    "general_solution",
    "verify_solution_form",
    "ExactScalar",
    "ModelParams",
    "WorkbenchSettings",
    "convergence_study",
    "integrate",
    "step",
    "measure_residuals",
    "SpinField",
    "init_field",
    "solve_connection",
    "verify_fundamental_constraint",
    "export_spectral_problem",
    "pauli_rep",
]
