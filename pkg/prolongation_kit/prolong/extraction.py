from __future__ import annotations

import logging
from dataclasses import dataclass, field

from prolongation_kit.errors.exceptions import InconsistentRelationError
from prolongation_kit.exterior.eds import build_eds
from prolongation_kit.liealg.lie_element import LieElement, X
from prolongation_kit.liealg.open_algebra import NAMED_BY_BRACKET, Generator, OpenAlgebra
from prolongation_kit.liealg.sl2 import frame_pair_names
from prolongation_kit.prolong.determining import derive_determining_equations
from prolongation_kit.prolong.solutions import EmittedRelation, SolutionCheck, verify_solution_form
from prolongation_kit.prolong.tower import Tower, build_ansatz
from prolongation_kit.settings.constants import BracketConvention

logger = logging.getLogger(__name__)

FRESH_START = 13


@dataclass
class Extraction:
    algebra: OpenAlgebra
    check: SolutionCheck
    imposed: list[str] = field(default_factory=list)
    named: dict[tuple[int, int], int] = field(default_factory=dict)
    reported: list[EmittedRelation] = field(default_factory=list)


def declared_generators(tower: Tower) -> list[int]:
    """Bare generators carried by H and G."""
    found: set[int] = set()
    for expr in (tower.h, tower.g):
        for _, coeff in expr.items():
            found.update(term for term, _ in coeff.items() if isinstance(term, int))
    return sorted(found)


def extract(tower: Tower, convention: BracketConvention = BracketConvention.GF) -> Extraction:
    ansatz, _ = build_ansatz(tower.params)
    equations = derive_determining_equations(ansatz, build_eds(tower.params))
    check = verify_solution_form(tower, equations, convention)
    if not check.passed:
        failure = check.failures[0]
        raise InconsistentRelationError(failure.element, failure.monomial_text)

    algebra = OpenAlgebra.declared(declared_generators(tower))
    result = Extraction(algebra, check)
    for relation in check.relations:
        if relation.first_jet_degree < 2:
            result.reported.append(relation)
            continue
        reduced = algebra.normalize(relation.element)
        if reduced.is_linear() and not reduced.is_zero():
            raise InconsistentRelationError(reduced, relation.monomial_text)
        text = algebra.add_relation(relation.element)
        if text is not None:
            result.imposed.append(text)

    names = frame_pair_names()
    fresh = max(algebra.next_index(), FRESH_START)
    for a, b in algebra.unknown_pairs():
        index = names.get((a, b))
        if index is None or index in algebra.generators:
            index, fresh = fresh, fresh + 1
        algebra.add_generator(Generator(index, NAMED_BY_BRACKET, (a, b), algebra.degree(a) + algebra.degree(b)))
        algebra.table[(a, b)] = X(index)
        result.named[(a, b)] = index
    algebra.renormalize()
    logger.info(
        "Álgebra extraída de %s: %d generadores, %d relaciones impuestas, %d informadas",
        tower.name,
        len(algebra.generators),
        len(result.imposed),
        len(result.reported),
    )
    return result


def extract_open_algebra(tower: Tower, convention: BracketConvention = BracketConvention.GF) -> OpenAlgebra:
    return extract(tower, convention).algebra


def reported_in_algebra(extraction: Extraction) -> list[LieElement]:
    """Reported relations rewritten with the extracted table; zero entries are dropped."""
    out = []
    for relation in extraction.reported:
        value = extraction.algebra.normalize(relation.element)
        if not value.is_zero():
            out.append(value)
    return out
