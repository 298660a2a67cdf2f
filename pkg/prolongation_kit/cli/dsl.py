from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from pathlib import Path
from typing import Optional

from lark import Lark, Transformer
from lark.exceptions import UnexpectedInput, VisitError

from prolongation_kit.errors.error_handlers import reraise_as_usage
from prolongation_kit.errors.exceptions import DslSyntaxError
from prolongation_kit.liealg.lie_element import LieElement, X
from prolongation_kit.liealg.open_algebra import OpenAlgebra
from prolongation_kit.scalar.exact_scalar import I_UNIT, LAMBDA, ONE, ZERO, ExactScalar

logger = logging.getLogger(__name__)

GRAMMAR = r"""
    stmt: sum "=" rhs
    ?rhs: sum
        | INT -> constant

    sum: first rest*
    first: term -> pos
        | "+" term -> pos
        | "-" term -> neg
    rest: "+" term -> pos
        | "-" term -> neg

    term: scalar "*" atom -> scaled
        | atom -> plain
    atom: GEN -> gen
        | "[" sum "," sum "]" -> word

    scalar_sum: sfirst srest*
    sfirst: scalar -> pos
        | "+" scalar -> pos
        | "-" scalar -> neg
    srest: "+" scalar -> pos
        | "-" scalar -> neg

    scalar: factor ("*" factor)*
    factor: INT "/" INT -> rational
        | INT -> integer
        | "i" -> imag
        | "lambda" "^" exponent -> lam_power
        | "lambda" -> lam
        | "(" scalar_sum ")" -> group
    exponent: INT -> pos_int
        | "-" INT -> neg_int

    GEN: /X[0-9]+/
    INT: /[0-9]+/

    %import common.WS_INLINE
    %ignore WS_INLINE
"""

BRACKET_DEFINITION = "bracket"
SUBSTITUTION = "substitution"
RELATION = "relation"


@lru_cache(maxsize=1)
def _parser() -> Lark:
    return Lark(GRAMMAR, start=["stmt", "scalar_sum"], parser="earley", lexer="basic")


class _AstTransformer(Transformer):
    def gen(self, children):
        (token,) = children
        return X(int(token[1:]))

    def word(self, children):
        left, right = children
        return left.commutator(right)

    def plain(self, children):
        return children[0]

    def scaled(self, children):
        scalar, atom = children
        return atom.scale(scalar)

    def pos(self, children):
        return children[0]

    def neg(self, children):
        return -children[0]

    def sum(self, children):
        total = LieElement()
        for child in children:
            total = total + child
        return total

    def scalar_sum(self, children):
        total = ZERO
        for child in children:
            total = total + child
        return total

    def scalar(self, children):
        product = ONE
        for child in children:
            product = product * child
        return product

    def rational(self, children):
        numerator, denominator = children
        return ExactScalar.of(Fraction(int(numerator), int(denominator)))

    def integer(self, children):
        return ExactScalar.of(int(children[0]))

    def imag(self, _):
        return I_UNIT

    def lam(self, _):
        return LAMBDA

    def lam_power(self, children):
        return LAMBDA ** children[0]

    def pos_int(self, children):
        return int(children[0])

    def neg_int(self, children):
        return -int(children[0])

    def group(self, children):
        return children[0]

    def constant(self, children):
        if int(children[0]) != 0:
            raise ValueError(f"A bare number on the right-hand side must be 0, got {children[0]}")
        return LieElement()

    def stmt(self, children):
        lhs, rhs = children
        return RelationAst.build(lhs, rhs)


@dataclass(frozen=True)
class RelationAst:
    kind: str
    lhs: LieElement
    rhs: LieElement
    line: int = field(default=0, compare=False)

    @classmethod
    def build(cls, lhs: LieElement, rhs: LieElement, line: int = 0) -> "RelationAst":
        kind = RELATION
        items = list(lhs.items())
        if len(items) == 1 and items[0][1].is_monomial():
            term = items[0][0]
            if isinstance(term, int):
                kind = SUBSTITUTION
            elif isinstance(term[0], int) and isinstance(term[1], int):
                kind = BRACKET_DEFINITION
        return cls(kind, lhs, rhs, line)

    def _lead(self):
        ((term, coeff),) = self.lhs.items()
        return term, coeff

    @property
    def pair(self) -> Optional[tuple[int, int]]:
        return self._lead()[0] if self.kind == BRACKET_DEFINITION else None

    @property
    def generator(self) -> Optional[int]:
        return self._lead()[0] if self.kind == SUBSTITUTION else None

    @property
    def value(self) -> LieElement:
        """Right-hand side divided by the left-hand coefficient."""
        _, coeff = self._lead()
        return self.rhs.scale(coeff.inverse())

    def as_relation(self) -> LieElement:
        return self.lhs - self.rhs

    def __str__(self) -> str:
        return f"{self.lhs} = {self.rhs}"


def _parse(text: str, start: str, line: int = 1):
    try:
        tree = _parser().parse(text, start=start)
    except UnexpectedInput as exc:
        expected = getattr(exc, "expected", None) or getattr(exc, "allowed", None) or ()
        column = exc.column if exc.column > 0 else len(text) + 1
        raise DslSyntaxError(line, column, expected, text) from exc
    try:
        return _AstTransformer().transform(tree)
    except VisitError as exc:
        raise exc.orig_exc from exc


def parse_scalar(text: str) -> ExactScalar:
    return _parse(text.strip(), "scalar_sum")


def parse_algebra_dsl(text: str) -> list[RelationAst]:
    """One statement per line; `#` starts a comment."""
    statements = []
    for number, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        if not body.strip():
            continue
        ast = _parse(body, "stmt", number)
        statements.append(RelationAst(ast.kind, ast.lhs, ast.rhs, number))
    logger.debug("Analizadas %d sentencias", len(statements))
    return statements


def format_statements(statements: list[RelationAst]) -> str:
    return "\n".join(str(s) for s in statements) + ("\n" if statements else "")


def build_algebra(statements: list[RelationAst]) -> tuple[OpenAlgebra, dict[int, LieElement]]:
    """Bracket definitions form the table, substitutions a closing map, anything else a relation."""
    table: dict[tuple[int, int], LieElement] = {}
    closing: dict[int, LieElement] = {}
    relations: list[LieElement] = []
    for statement in statements:
        if statement.kind == BRACKET_DEFINITION:
            table[statement.pair] = statement.value
        elif statement.kind == SUBSTITUTION:
            closing[statement.generator] = statement.value
        else:
            relations.append(statement.as_relation())
    return OpenAlgebra(table=table, relations=relations), closing


@reraise_as_usage
def load_algebra(path: str | Path) -> tuple[OpenAlgebra, dict[int, LieElement]]:
    return build_algebra(parse_algebra_dsl(Path(path).read_text(encoding="utf-8")))
