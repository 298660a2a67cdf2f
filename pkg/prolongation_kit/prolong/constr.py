from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Mapping, Optional

from prolongation_kit.liealg.closure import substitute_generators
from prolongation_kit.liealg.lie_element import LieElement
from prolongation_kit.liealg.open_algebra import OpenAlgebra
from prolongation_kit.prolong.extraction import extract_open_algebra
from prolongation_kit.prolong.tower import Tower
from prolongation_kit.scalar.exact_scalar import ONE, ExactScalar
from prolongation_kit.scalar.field_expr import FieldExpr
from prolongation_kit.scalar.linalg import ScalarMatrix, commutator, format_matrix, invert, is_zero_matrix, scalar_value
from prolongation_kit.settings.constants import BbarInterpretation

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ConstrReport:
    ab_commutator: ScalarMatrix
    bbar: Optional[ExactScalar]
    difference: Optional[FieldExpr]
    interpretation: BbarInterpretation
    note: str = ""

    @property
    def ab_passed(self) -> bool:
        return is_zero_matrix(self.ab_commutator)

    @property
    def witness(self) -> str:
        return format_matrix(self.ab_commutator)


def lie_bracket(left: FieldExpr, right: FieldExpr, algebra: OpenAlgebra) -> FieldExpr:
    return left.pair(right, lambda a, b: algebra.bracket(algebra.normalize(a), algebra.normalize(b)))


def check_constr_relation(
    tower: Tower,
    algebra: Optional[OpenAlgebra] = None,
    interpretation: BbarInterpretation = BbarInterpretation.INVERSE,
    closing: Optional[Mapping[int, LieElement]] = None,
) -> ConstrReport:
    """[A,B] = 0 and the difference [G,F] − [B̄H, B̄F] for B = bI, after an optional closing map."""
    ab = commutator(tower.A, tower.B)
    if not is_zero_matrix(ab):
        logger.info("[A,B] no se anula en %s; se omite la relación de restricción", tower.name)
        return ConstrReport(ab, None, None, interpretation, note="[A,B] is nonzero; only [A,B] checked")
    b = scalar_value(tower.B)
    if b is None or tower.params.n != 1:
        logger.info("B no es escalar; se omite la relación de restricción")
        return ConstrReport(ab, None, None, interpretation, note="B is not scalar; only [A,B] checked")

    bbar = scalar_value(invert(tower.B)) if interpretation == BbarInterpretation.INVERSE else ONE
    if algebra is None:
        algebra = extract_open_algebra(tower)
    h, f, g = tower.h, tower.f, tower.g
    if closing:
        h, f, g = (e.map_coefficients(lambda c: substitute_generators(c, closing)) for e in (h, f, g))
    left = lie_bracket(g, f, algebra)
    right = lie_bracket(h, f, algebra) * (bbar * bbar)
    difference = (left - right).map_coefficients(algebra.normalize)
    logger.info("Diferencia de la relación de restricción en %s: %s", tower.name, difference)
    return ConstrReport(ab, bbar, difference, interpretation)
