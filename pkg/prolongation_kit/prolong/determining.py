from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional

from prolongation_kit.exterior.diff_form import Basis, basis_name
from prolongation_kit.exterior.eds import integrability_condition
from prolongation_kit.exterior.ideal import EdsIdeal
from prolongation_kit.prolong.tower import Tower
from prolongation_kit.scalar.field_expr import FieldExpr
from prolongation_kit.scalar.linalg import commutator

logger = logging.getLogger(__name__)

_FIBER_LABELS = {
    (("x", "y"), "x"): "H_Sx",
    (("x", "y"), "y"): "H_Sy",
    (("y", "t"), "x"): "F_Sx",
    (("y", "t"), "y"): "F_Sy",
    (("x", "t"), "x"): "G_Sx",
    (("x", "t"), "y"): "G_Sy",
}


@dataclass(frozen=True)
class DeterminingEquation:
    residual: FieldExpr
    origin: str
    label: str
    component: int = 1
    basis: Optional[Basis] = None

    def __str__(self) -> str:
        return f"{self.residual} = 0"


def classify_origin(basis: Basis) -> str:
    coords = tuple(s.base for s in basis if s.kind == "coord")
    fibers = [s for s in basis if s.kind != "coord"]
    if not fibers and coords == ("x", "y", "t"):
        return "fundamental"
    if len(fibers) == 1 and fibers[0].kind == "xi" and coords == ("x", "y"):
        return "frame"
    if len(fibers) == 1 and fibers[0].kind == "field" and fibers[0].derivs in ("x", "y"):
        return _FIBER_LABELS.get((coords, fibers[0].derivs), "unmatched")
    return "unmatched"


def derive_determining_equations(tower: Tower, ideal: EdsIdeal) -> list[DeterminingEquation]:
    """One equation per basis monomial of dΩ^k reduced modulo the ideal, then the [A,B] entries."""
    equations: list[DeterminingEquation] = []
    for k, reduced in enumerate(integrability_condition(tower, ideal), start=1):
        for basis, coeff in reduced.items():
            label = classify_origin(basis)
            if label == "unmatched":
                logger.warning("Monomio %s sin ecuación conocida", basis_name(basis))
            equations.append(DeterminingEquation(coeff, f"Omega{k}: {basis_name(basis)}", label, k, basis))
    ab = commutator(tower.A, tower.B)
    for i, row in enumerate(ab, start=1):
        for j, value in enumerate(row, start=1):
            equations.append(DeterminingEquation(FieldExpr.constant(value), f"[A,B]_{i}{j}", "commutator_AB", i))
    logger.info("Derivadas %d ecuaciones determinantes", len(equations))
    return equations


def equations_by_label(equations: list[DeterminingEquation]) -> dict[str, list[DeterminingEquation]]:
    grouped: dict[str, list[DeterminingEquation]] = {}
    for eq in equations:
        grouped.setdefault(eq.label, []).append(eq)
    return grouped
