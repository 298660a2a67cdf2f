from __future__ import annotations

import logging
from itertools import combinations
from typing import Mapping, Optional

from prolongation_kit.liealg.lie_element import LieElement, X
from prolongation_kit.liealg.open_algebra import OpenAlgebra

logger = logging.getLogger(__name__)


def relabel(element: LieElement, mapping: Mapping[int, int]) -> LieElement:
    def image(term):
        if isinstance(term, int):
            return X(mapping[term])
        return image(term[0]).commutator(image(term[1]))

    return element.map_terms(image)


def _consistent(source: OpenAlgebra, target: OpenAlgebra, mapping: dict[int, int], newest: int) -> bool:
    for other in mapping:
        if other == newest:
            continue
        a, b = min(other, newest), max(other, newest)
        value = source.normalize(X(a).commutator(X(b)))
        if any(g not in mapping for g in value.generators()):
            continue
        expected = target.normalize(X(mapping[a]).commutator(X(mapping[b])))
        if target.normalize(relabel(value, mapping)) != expected:
            return False
    return True


def _deferred_ok(source: OpenAlgebra, target: OpenAlgebra, mapping: dict[int, int]) -> bool:
    for a, b in combinations(source.indices, 2):
        value = source.normalize(X(a).commutator(X(b)))
        expected = target.normalize(X(mapping[a]).commutator(X(mapping[b])))
        if target.normalize(relabel(value, mapping)) != expected:
            return False
    inverse = {v: k for k, v in mapping.items()}
    if any(not target.normalize(relabel(r, mapping)).is_zero() for r in source.relations):
        return False
    return all(source.normalize(relabel(r, inverse)).is_zero() for r in target.relations)


def find_relabeling_isomorphism(source: OpenAlgebra, target: OpenAlgebra) -> Optional[dict[int, int]]:
    """First index bijection, in lexicographic search order, that carries one table onto the other."""
    if len(source.generators) != len(target.generators):
        return None
    if len(source.table) != len(target.table) or len(source.rules) != len(target.rules):
        return None
    order = source.indices
    candidates = target.indices

    def search(position: int, mapping: dict[int, int], used: set[int]) -> Optional[dict[int, int]]:
        if position == len(order):
            return dict(mapping) if _deferred_ok(source, target, mapping) else None
        current = order[position]
        for candidate in candidates:
            if candidate in used or source.degree(current) != target.degree(candidate):
                continue
            mapping[current] = candidate
            used.add(candidate)
            if _consistent(source, target, mapping, current):
                found = search(position + 1, mapping, used)
                if found is not None:
                    return found
            del mapping[current]
            used.discard(candidate)
        return None

    result = search(0, {}, set())
    logger.debug("Isomorfismo por reetiquetado: %s", result)
    return result
