from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, Mapping, Optional

from prolongation_kit.liealg.lie_element import LieElement, Term, term_key, term_str
from prolongation_kit.scalar.exact_scalar import ExactScalar

logger = logging.getLogger(__name__)

DECLARED = "declared"
NAMED_BY_BRACKET = "bracket"
CLOSURE_DERIVED = "closure"

MAX_RENORMALIZE = 50


@dataclass(frozen=True)
class Generator:
    index: int
    provenance: str = DECLARED
    pair: Optional[tuple[int, int]] = None
    degree: int = 1

    @property
    def name(self) -> str:
        return f"X{self.index}"


def _orient(relation: LieElement) -> Optional[tuple[Term, LieElement]]:
    """Pick the rewrite lead: smallest word, or largest generator when the relation is linear."""
    if relation.is_linear():
        candidates = sorted((t for t, _ in relation.items()), key=term_key, reverse=True)
    else:
        candidates = sorted((t for t, _ in relation.items() if not isinstance(t, int)), key=term_key)
    for lead in candidates:
        coeff = relation.coefficient(lead)
        if coeff.is_monomial():
            rest = relation - LieElement({lead: coeff})
            return lead, (-rest).scale(coeff.inverse())
    return None


class OpenAlgebra:
    """Generators with a partial bracket table and rewrite rules derived from relations."""

    def __init__(
        self,
        generators: Iterable[Generator] = (),
        table: Optional[Mapping[tuple[int, int], LieElement]] = None,
        relations: Iterable[LieElement] = (),
    ) -> None:
        self.generators: dict[int, Generator] = {g.index: g for g in sorted(generators, key=lambda g: g.index)}
        self.table: dict[tuple[int, int], LieElement] = {}
        self.rules: dict[Term, LieElement] = {}
        self.relations: list[LieElement] = []
        self._unoriented: list[LieElement] = []
        for (i, j), value in (table or {}).items():
            self._store_bracket(i, j, value)
        self.renormalize()
        for relation in relations:
            self.add_relation(relation)

    @classmethod
    def declared(cls, indices: Iterable[int]) -> "OpenAlgebra":
        return cls([Generator(i) for i in indices])

    def copy(self) -> "OpenAlgebra":
        clone = OpenAlgebra(self.generators.values())
        clone.table = dict(self.table)
        clone.rules = dict(self.rules)
        clone.relations = list(self.relations)
        clone._unoriented = list(self._unoriented)
        return clone

    @property
    def indices(self) -> list[int]:
        return sorted(self.generators)

    def next_index(self) -> int:
        return max(self.generators, default=0) + 1

    def degree(self, index: int) -> int:
        return self.generators[index].degree

    def _store_bracket(self, i: int, j: int, value: LieElement) -> None:
        if i == j:
            raise ValueError(f"[X{i},X{i}] is always zero")
        if i > j:
            i, j, value = j, i, -value
        for index in (i, j, *value.generators()):
            if index not in self.generators:
                self.generators[index] = Generator(index)
        self.table[(i, j)] = value

    def add_generator(self, generator: Generator) -> None:
        self.generators[generator.index] = generator
        self.generators = dict(sorted(self.generators.items()))

    def define_bracket(self, i: int, j: int, value: LieElement) -> None:
        self._store_bracket(i, j, value)
        self.renormalize()

    def is_known(self, i: int, j: int) -> bool:
        a, b = min(i, j), max(i, j)
        return (a, b) in self.table or (a, b) in self.rules

    def unknown_pairs(self) -> list[tuple[int, int]]:
        idx = self.indices
        return [(a, b) for n, a in enumerate(idx) for b in idx[n + 1:] if not self.is_known(a, b)]

    def _normalize_term(self, term: Term) -> LieElement:
        if isinstance(term, int):
            if term in self.rules:
                return self.rules[term]
            return LieElement({term: ExactScalar.of(1)})
        left = self._normalize_term(term[0])
        right = self._normalize_term(term[1])
        return self.bracket(left, right)

    def _bracket_terms(self, a: Term, b: Term) -> LieElement:
        if a == b:
            return LieElement()
        sign = 1
        if term_key(a) > term_key(b):
            a, b, sign = b, a, -1
        if isinstance(a, int) and isinstance(b, int) and (a, b) in self.table:
            value = self.table[(a, b)]
        elif (a, b) in self.rules:
            value = self.rules[(a, b)]
        else:
            value = LieElement({(a, b): ExactScalar.of(1)})
        return value if sign > 0 else -value

    def bracket(self, left: LieElement, right: LieElement) -> LieElement:
        """Bracket of two normalized elements."""
        result = LieElement()
        for t1, c1 in left.items():
            for t2, c2 in right.items():
                result = result + self._bracket_terms(t1, t2).scale(c1 * c2)
        return result

    def normalize(self, element: LieElement) -> LieElement:
        return element.map_terms(self._normalize_term)

    def renormalize(self) -> None:
        for _ in range(MAX_RENORMALIZE):
            changed = False
            for key, value in list(self.table.items()):
                new = self.normalize(value)
                if new != value:
                    self.table[key] = new
                    changed = True
            for lead, value in list(self.rules.items()):
                new = self.normalize(value)
                if new != value:
                    self.rules[lead] = new
                    changed = True
            if not changed:
                return
        logger.warning("La tabla no se estabilizó tras %d pasadas", MAX_RENORMALIZE)

    def add_relation(self, relation: LieElement) -> Optional[str]:
        """Impose ``relation = 0``; returns its oriented text or None when it is already implied."""
        reduced = self.normalize(relation)
        if reduced.is_zero():
            return None
        oriented = _orient(reduced)
        if oriented is None:
            self._unoriented.append(reduced)
            self.relations.append(reduced)
            return f"{reduced} = 0"
        lead, value = oriented
        if isinstance(lead, tuple) and isinstance(lead[0], int) and isinstance(lead[1], int):
            self.table[lead] = value
        else:
            self.rules[lead] = value
        self.relations.append(LieElement({lead: ExactScalar.of(1)}) - value)
        self.renormalize()
        text = f"{term_str(lead)} = {value}"
        logger.debug("Relación añadida: %s", text)
        return text

    def relations_hold(self) -> bool:
        return all(self.normalize(r).is_zero() for r in self.relations)

    def dump(self) -> str:
        """Table as `[Xi,Xj] = <element>` lines sorted by pair, then relations."""
        lines = [f"[X{i},X{j}] = {self.table[(i, j)]}" for i, j in sorted(self.table)]
        for lead in sorted(self.rules, key=term_key):
            lines.append(f"{term_str(lead)} = {self.rules[lead]}")
        for relation in self._unoriented:
            lines.append(f"{relation} = 0")
        return "\n".join(lines)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, OpenAlgebra):
            return NotImplemented
        return (
            set(self.generators) == set(other.generators)
            and self.table == other.table
            and self.rules == other.rules
        )

    def __repr__(self) -> str:
        return f"OpenAlgebra(generators={len(self.generators)}, brackets={len(self.table)})"


def normalize(element: LieElement, algebra: OpenAlgebra) -> LieElement:
    return algebra.normalize(element)
