from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Mapping

from prolongation_kit.contracts.coefficient import Coefficient
from prolongation_kit.errors.exceptions import UncoveredGeneratorError
from prolongation_kit.liealg.lie_element import LieElement, Term, X, term_str
from prolongation_kit.liealg.open_algebra import OpenAlgebra

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MatrixRep:
    """Generator images in a coefficient algebra with a commutator (2×2 matrices in practice)."""

    images: Mapping[int, Coefficient]
    zero: Coefficient

    def image_of_term(self, term: Term) -> Coefficient:
        if isinstance(term, int):
            if term not in self.images:
                raise UncoveredGeneratorError(term)
            return self.images[term]
        return self.image_of_term(term[0]).commutator(self.image_of_term(term[1]))

    def image(self, element: LieElement) -> Coefficient:
        result = self.zero
        for term, coeff in element.items():
            result = result + self.image_of_term(term).scale(coeff)
        return result

    def covers(self, indices) -> bool:
        return all(i in self.images for i in indices)


@dataclass(frozen=True)
class ResidualEntry:
    label: str
    residual: Coefficient

    @property
    def passed(self) -> bool:
        return self.residual.is_zero()


@dataclass
class HomomorphismReport:
    entries: list[ResidualEntry] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(e.passed for e in self.entries)

    def failures(self) -> list[ResidualEntry]:
        return [e for e in self.entries if not e.passed]


def verify_homomorphism(algebra: OpenAlgebra, rep: MatrixRep) -> HomomorphismReport:
    for index in algebra.indices:
        if index not in rep.images:
            raise UncoveredGeneratorError(index)
    report = HomomorphismReport()
    for (i, j), value in sorted(algebra.table.items()):
        lhs = rep.image(X(i)).commutator(rep.image(X(j)))
        report.entries.append(ResidualEntry(f"[X{i},X{j}] = {value}", lhs - rep.image(value)))
    for lead, value in algebra.rules.items():
        report.entries.append(ResidualEntry(f"{term_str(lead)} = {value}", rep.image_of_term(lead) - rep.image(value)))
    for relation in algebra.relations:
        report.entries.append(ResidualEntry(f"{relation} = 0", rep.image(relation)))
    if not report.passed:
        logger.warning("Homomorfismo con %d residuos no nulos", len(report.failures()))
    return report
