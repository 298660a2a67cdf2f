from .connection import ConnectionComponents, ConnectionResult, connection_residuals, solve_connection
from .constraint import gradient_contraction, matrix_bracket, verify_fundamental_constraint
from .export import SpectralDocument, compatibility_conditions, export_spectral_problem, time_bindings
from .matrix2 import IDENTITY2, PAULI, SIGMA1, SIGMA2, SIGMA3, ZERO2, Matrix2
from .pauli import MatrixTower, instantiate_tower, pauli_rep

__all__ = [
    "ConnectionComponents",
    "ConnectionResult",
    "connection_residuals",
    "solve_connection",
    "gradient_contraction",
    "matrix_bracket",
    "verify_fundamental_constraint",
    "SpectralDocument",
    "compatibility_conditions",
    "export_spectral_problem",
    "time_bindings",
    "IDENTITY2",
    "PAULI",
    "SIGMA1",
    "SIGMA2",
    "SIGMA3",
    "ZERO2",
    "Matrix2",
    "MatrixTower",
    "instantiate_tower",
    "pauli_rep",
]
