from __future__ import annotations

from prolongation_kit.scalar.field_expr import FieldExpr
from prolongation_kit.scalar.jet import field, spin
from prolongation_kit.settings.constants import BracketConvention


def gradient_contraction(expr: FieldExpr, direction: str) -> FieldExpr:
    """expr_S · S_direction."""
    result = FieldExpr()
    for k, s in enumerate(spin(""), start=1):
        result = result + expr.differentiate(s) * FieldExpr.symbol(field(k, direction))
    return result


def matrix_bracket(left: FieldExpr, right: FieldExpr) -> FieldExpr:
    return left.pair(right, lambda a, b: a.commutator(b))


def verify_fundamental_constraint(
    Fm: FieldExpr, Gm: FieldExpr, convention: BracketConvention = BracketConvention.GF
) -> FieldExpr:
    """F_S·S_x − G_S·S_y + [G,F], or + [F,G] under the FG orientation."""
    bracket = matrix_bracket(Gm, Fm) if convention == BracketConvention.GF else matrix_bracket(Fm, Gm)
    return gradient_contraction(Fm, "x") - gradient_contraction(Gm, "y") + bracket
