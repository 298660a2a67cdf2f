from __future__ import annotations

import logging
from dataclasses import dataclass

from prolongation_kit.errors.exceptions import UncoveredGeneratorError
from prolongation_kit.liealg.homomorphism import MatrixRep
from prolongation_kit.liealg.sl2 import TWO_I_LAMBDA, closing_pairs
from prolongation_kit.prolong.tower import Tower
from prolongation_kit.registry.reduction_registry import get_reduction_config
from prolongation_kit.scalar.exact_scalar import LAMBDA
from prolongation_kit.scalar.field_expr import FieldExpr
from prolongation_kit.settings.constants import Reduction
from prolongation_kit.spectral.matrix2 import PAULI, ZERO2, Matrix2

logger = logging.getLogger(__name__)

STRUCTURE_GENERATORS = range(1, 13)


@dataclass(frozen=True)
class MatrixTower:
    H: FieldExpr
    F: FieldExpr
    G: FieldExpr
    name: str = "tower"


def pauli_rep(which: str | Reduction) -> MatrixRep:
    """Surviving frame generator, X4, X5 ↦ λσ1, λσ2, λσ3; closing targets follow their images."""
    config = get_reduction_config(which)
    images: dict[int, Matrix2] = {index: ZERO2 for index in STRUCTURE_GENERATORS}
    for index, sigma in zip((config["frame"], 4, 5), PAULI):
        images[index] = sigma.scale(LAMBDA)
    for target, source in config.get("identify", {}).items():
        images[target] = images[source]
    for target, (source, sign) in closing_pairs(which).items():
        images[target] = images[source].scale(TWO_I_LAMBDA * sign)
    return MatrixRep(images, ZERO2)


def _image(expr: FieldExpr, rep: MatrixRep) -> FieldExpr:
    for _, coeff in expr.items():
        for index in coeff.generators():
            if index not in rep.images:
                raise UncoveredGeneratorError(index)
    return expr.map_coefficients(rep.image)


def instantiate_tower(tower: Tower, rep: MatrixRep) -> MatrixTower:
    matrices = MatrixTower(_image(tower.h, rep), _image(tower.f, rep), _image(tower.g, rep), tower.name)
    logger.debug("Torre %s instanciada en matrices", tower.name)
    return matrices
