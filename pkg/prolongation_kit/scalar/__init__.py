from .exact_scalar import I_UNIT, LAMBDA, LAMBDA_SYMBOL, ONE, ZERO, ExactScalar
from .field_expr import FieldExpr, Monomial, cross, dot, sym, symbol_derivative, total_derivative
from .linalg import ScalarMatrix, as_matrix, commutator, format_matrix, identity, invert, is_zero_matrix, mat_mul, mat_sub, scalar_matrix, scalar_value
from .jet import JetSymbol, coord, field, prolong_symbol, spin, total, unknown, xi
from .params import ModelParams

__all__ = [
    "I_UNIT",
    "LAMBDA",
    "LAMBDA_SYMBOL",
    "ONE",
    "ZERO",
    "ExactScalar",
    "FieldExpr",
    "Monomial",
    "cross",
    "dot",
    "sym",
    "symbol_derivative",
    "total_derivative",
    "JetSymbol",
    "coord",
    "field",
    "prolong_symbol",
    "spin",
    "total",
    "unknown",
    "xi",
    "ModelParams",
    "ScalarMatrix",
    "as_matrix",
    "commutator",
    "format_matrix",
    "identity",
    "invert",
    "is_zero_matrix",
    "mat_mul",
    "mat_sub",
    "scalar_matrix",
    "scalar_value",
]
