from .constr import ConstrReport, check_constr_relation, lie_bracket
from .determining import DeterminingEquation, classify_origin, derive_determining_equations, equations_by_label
from .extraction import Extraction, declared_generators, extract, extract_open_algebra, reported_in_algebra
from .solutions import EmittedRelation, SolutionCheck, build_reduction, general_solution, verify_solution_form
from .tower import Tower, build_ansatz, concrete_tower, omega_from_connection

__all__ = [
    "ConstrReport",
    "check_constr_relation",
    "lie_bracket",
    "DeterminingEquation",
    "classify_origin",
    "derive_determining_equations",
    "equations_by_label",
    "Extraction",
    "declared_generators",
    "extract",
    "extract_open_algebra",
    "reported_in_algebra",
    "EmittedRelation",
    "SolutionCheck",
    "build_reduction",
    "general_solution",
    "verify_solution_form",
    "Tower",
    "build_ansatz",
    "concrete_tower",
    "omega_from_connection",
]
