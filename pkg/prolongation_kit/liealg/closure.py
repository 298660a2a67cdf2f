from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Mapping

from prolongation_kit.errors.exceptions import ClosingInconsistencyError
from prolongation_kit.liealg.lie_element import LieElement, X
from prolongation_kit.liealg.open_algebra import CLOSURE_DERIVED, Generator, OpenAlgebra

logger = logging.getLogger(__name__)


@dataclass
class ClosurePass:
    index: int
    target_degree: int
    new_relations: list[str] = field(default_factory=list)
    new_generators: list[Generator] = field(default_factory=list)
    generator_count: int = 0


@dataclass
class ClosureReport:
    passes: list[ClosurePass] = field(default_factory=list)

    @property
    def generator_counts(self) -> list[int]:
        return [p.generator_count for p in self.passes]

    @property
    def reached_fixpoint(self) -> bool:
        return bool(self.passes) and not self.passes[-1].new_generators and not self.passes[-1].new_relations


def jacobi_combination(algebra: OpenAlgebra, a: int, b: int, c: int) -> LieElement:
    xa, xb, xc = X(a), X(b), X(c)
    total = (
        algebra.bracket(xa, algebra.bracket(xb, xc))
        + algebra.bracket(xb, algebra.bracket(xc, xa))
        + algebra.bracket(xc, algebra.bracket(xa, xb))
    )
    return algebra.normalize(total)


def jacobi_defects(algebra: OpenAlgebra) -> list[tuple[tuple[int, int, int], LieElement]]:
    """Every generator triple whose Jacobi combination does not vanish."""
    defects = []
    for triple in combinations(algebra.indices, 3):
        value = jacobi_combination(algebra, *triple)
        if not value.is_zero():
            defects.append((triple, value))
    return defects


def jacobi_closure(algebra: OpenAlgebra, depth: int) -> tuple[OpenAlgebra, ClosureReport]:
    """Graded Jacobi closure: each pass imposes the next degree's identities and names its unknown brackets."""
    if depth < 1:
        raise ValueError("depth must be >= 1")
    current = algebra.copy()
    report = ClosureReport()
    evaluated: set[tuple[int, int, int]] = set()
    for index in range(1, depth + 1):
        target = max(3, max((g.degree for g in current.generators.values()), default=1) + 1)
        step = ClosurePass(index=index, target_degree=target)
        for triple in combinations(current.indices, 3):
            if triple in evaluated or sum(current.degree(i) for i in triple) > target:
                continue
            evaluated.add(triple)
            text = current.add_relation(jacobi_combination(current, *triple))
            if text is not None:
                step.new_relations.append(text)
        for a, b in current.unknown_pairs():
            degree = current.degree(a) + current.degree(b)
            if degree > target:
                continue
            generator = Generator(current.next_index(), CLOSURE_DERIVED, (a, b), degree)
            current.add_generator(generator)
            current.table[(a, b)] = X(generator.index)
            step.new_generators.append(generator)
        current.renormalize()
        step.generator_count = len(current.generators)
        logger.info(
            "Pasada %d: %d relaciones, %d generadores nuevos, total %d",
            index,
            len(step.new_relations),
            len(step.new_generators),
            step.generator_count,
        )
        report.passes.append(step)
    if not report.reached_fixpoint:
        logger.info("Sin punto fijo dentro de profundidad %d", depth)
    return current, report


def substitute_generators(element: LieElement, closing: Mapping[int, LieElement]) -> LieElement:
    def image(term):
        if isinstance(term, int):
            return closing.get(term, X(term))
        return image(term[0]).commutator(image(term[1]))

    return element.map_terms(image)


def apply_closing_map(algebra: OpenAlgebra, closing: Mapping[int, LieElement]) -> OpenAlgebra:
    survivors = [i for i in algebra.indices if i not in closing]
    for target, value in closing.items():
        stray = value.generators() - set(survivors)
        if stray:
            raise ValueError(f"Image of X{target} uses eliminated generators {sorted(stray)}")

    quotient = OpenAlgebra([algebra.generators[i] for i in survivors])
    checks: list[tuple[tuple[int, int], LieElement]] = []
    for (i, j), value in sorted(algebra.table.items()):
        if i in closing or j in closing:
            checks.append(((i, j), value))
        else:
            quotient.table[(i, j)] = substitute_generators(value, closing)
    quotient.renormalize()

    pending = []
    for pair, value in checks:
        left = substitute_generators(X(pair[0]), closing)
        right = substitute_generators(X(pair[1]), closing)
        pending.append((pair, left.commutator(right) - substitute_generators(value, closing)))
    pending += [(None, substitute_generators(relation, closing)) for relation in algebra.relations]
    for pair, residual in pending:
        reduced = quotient.normalize(residual)
        if reduced.is_zero():
            continue
        if reduced.is_linear():
            raise ClosingInconsistencyError(reduced, pair)
        quotient.add_relation(reduced)
    logger.info("Cierre aplicado: %d generadores sobreviven", len(survivors))
    return quotient
