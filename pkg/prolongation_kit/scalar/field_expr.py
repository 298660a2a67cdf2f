from __future__ import annotations

from fractions import Fraction
from typing import Any, Callable, Iterable, Iterator, Mapping, Optional, Union

import numpy as np
import sympy

from prolongation_kit.contracts.coefficient import Coefficient
from prolongation_kit.errors.exceptions import CoefficientMismatchError, CyclicBindingError, JetOrderError
from prolongation_kit.scalar.exact_scalar import LAMBDA_SYMBOL, ONE, ExactScalar
from prolongation_kit.scalar.jet import COORDINATES, JetSymbol, prolong_symbol, total

Monomial = tuple[tuple[JetSymbol, int], ...]
Operand = Union["FieldExpr", Coefficient, int, Fraction]


def _monomial_key(monomial: Monomial) -> tuple:
    return (sum(e for _, e in monomial), tuple((s.sort_key(), e) for s, e in monomial))


def _merge(a: Monomial, b: Monomial) -> Monomial:
    powers: dict[JetSymbol, int] = dict(a)
    for symbol, exp in b:
        powers[symbol] = powers.get(symbol, 0) + exp
    return tuple(sorted(powers.items(), key=lambda item: item[0].sort_key()))


def _coefficient_product(a: Coefficient, b: Coefficient) -> Coefficient:
    if isinstance(a, ExactScalar) and isinstance(b, ExactScalar):
        return a * b
    if isinstance(b, ExactScalar):
        return a.scale(b)
    if isinstance(a, ExactScalar):
        return b.scale(a)
    if type(a) is not type(b):
        raise CoefficientMismatchError(type(a), type(b))
    return a.multiply(b)


def _format_monomial(monomial: Monomial) -> str:
    return "*".join(s.name if e == 1 else f"{s.name}^{e}" for s, e in monomial)


class FieldExpr:
    """Polynomial in jet symbols with coefficients in one coefficient algebra."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Mapping[Monomial, Coefficient]] = None) -> None:
        algebra: Optional[type] = None
        cleaned: dict[Monomial, Coefficient] = {}
        for monomial, coeff in (terms or {}).items():
            if coeff.is_zero():
                continue
            if algebra is None:
                algebra = type(coeff)
            elif type(coeff) is not algebra:
                raise CoefficientMismatchError(algebra, type(coeff))
            cleaned[monomial] = coeff
        self._terms = {m: cleaned[m] for m in sorted(cleaned, key=_monomial_key)}

    @classmethod
    def zero(cls) -> "FieldExpr":
        return cls()

    @classmethod
    def constant(cls, value: Coefficient | int | Fraction) -> "FieldExpr":
        if isinstance(value, (int, Fraction)):
            value = ExactScalar.of(value)
        return cls({(): value})

    @classmethod
    def symbol(cls, symbol: JetSymbol, coeff: Coefficient | int = 1, power: int = 1) -> "FieldExpr":
        if isinstance(coeff, int):
            coeff = ExactScalar.of(coeff)
        if power == 0:
            return cls({(): coeff})
        return cls({((symbol, power),): coeff})

    @classmethod
    def lift(cls, value: Operand) -> "FieldExpr":
        if isinstance(value, FieldExpr):
            return value
        return cls.constant(value)

    @property
    def algebra(self) -> Optional[type]:
        for coeff in self._terms.values():
            return type(coeff)
        return None

    def items(self) -> Iterator[tuple[Monomial, Coefficient]]:
        return iter(self._terms.items())

    def coefficient(self, monomial: Monomial) -> Optional[Coefficient]:
        return self._terms.get(monomial)

    def constant_term(self) -> Optional[Coefficient]:
        return self._terms.get(())

    def symbols(self) -> set[JetSymbol]:
        return {s for monomial in self._terms for s, _ in monomial}

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __add__(self, other: Operand) -> "FieldExpr":
        other = FieldExpr.lift(other)
        mine, theirs = self.algebra, other.algebra
        if mine is not None and theirs is not None and mine is not theirs:
            raise CoefficientMismatchError(mine, theirs)
        out = dict(self._terms)
        for monomial, coeff in other._terms.items():
            out[monomial] = out[monomial] + coeff if monomial in out else coeff
        return FieldExpr(out)

    def __radd__(self, other: Operand) -> "FieldExpr":
        return FieldExpr.lift(other) + self

    def __neg__(self) -> "FieldExpr":
        return FieldExpr({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: Operand) -> "FieldExpr":
        return self + (-FieldExpr.lift(other))

    def __rsub__(self, other: Operand) -> "FieldExpr":
        return FieldExpr.lift(other) - self

    def __mul__(self, other: Operand) -> "FieldExpr":
        other = FieldExpr.lift(other)
        out: dict[Monomial, Coefficient] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                monomial = _merge(m1, m2)
                prod = _coefficient_product(c1, c2)
                out[monomial] = out[monomial] + prod if monomial in out else prod
        return FieldExpr(out)

    def __rmul__(self, other: Operand) -> "FieldExpr":
        return FieldExpr.lift(other) * self

    def __pow__(self, power: int) -> "FieldExpr":
        if power < 0:
            raise ValueError("FieldExpr powers must be non-negative")
        result = FieldExpr.constant(ONE)
        for _ in range(power):
            result = result * self
        return result

    def map_coefficients(self, fn: Callable[[Coefficient], Coefficient]) -> "FieldExpr":
        return FieldExpr({m: fn(c) for m, c in self._terms.items()})

    def pair(self, other: "FieldExpr", fn: Callable[[Coefficient, Coefficient], Coefficient]) -> "FieldExpr":
        """Bilinear extension of ``fn`` over the jet-monomial parts."""
        out: dict[Monomial, Coefficient] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                monomial = _merge(m1, m2)
                value = fn(c1, c2)
                out[monomial] = out[monomial] + value if monomial in out else value
        return FieldExpr(out)

    def differentiate(self, symbol: JetSymbol) -> "FieldExpr":
        if symbol.kind == "total":
            raise ValueError(f"Cannot take a partial derivative with respect to {symbol.name}")
        out: dict[Monomial, Coefficient] = {}
        for monomial, coeff in self._terms.items():
            powers = dict(monomial)
            exp = powers.get(symbol, 0)
            if exp == 0:
                continue
            if exp == 1:
                del powers[symbol]
            else:
                powers[symbol] = exp - 1
            reduced = tuple(sorted(powers.items(), key=lambda item: item[0].sort_key()))
            value = coeff.scale(ExactScalar.of(exp))
            out[reduced] = out[reduced] + value if reduced in out else value
        return FieldExpr(out)

    def substitute(self, bindings: Mapping[JetSymbol, "FieldExpr"]) -> "FieldExpr":
        if not bindings:
            return self
        _check_acyclic(bindings)
        result = FieldExpr()
        for monomial, coeff in self._terms.items():
            term = FieldExpr.constant(coeff)
            for symbol, exp in monomial:
                factor = FieldExpr.lift(bindings[symbol]) if symbol in bindings else FieldExpr.symbol(symbol)
                term = term * (factor**exp)
            result = result + term
        return result

    def collect(self, predicate: Callable[[JetSymbol], bool]) -> dict[Monomial, "FieldExpr"]:
        """Group terms by their sub-monomial in the symbols selected by ``predicate``."""
        groups: dict[Monomial, dict[Monomial, Coefficient]] = {}
        for monomial, coeff in self._terms.items():
            key = tuple((s, e) for s, e in monomial if predicate(s))
            rest = tuple((s, e) for s, e in monomial if not predicate(s))
            groups.setdefault(key, {})[rest] = coeff
        return {k: FieldExpr(groups[k]) for k in sorted(groups, key=_monomial_key)}

    def divide_by_symbol(self, symbol: JetSymbol) -> tuple["FieldExpr", "FieldExpr"]:
        """Split into quotient and remainder with respect to a single symbol."""
        quotient: dict[Monomial, Coefficient] = {}
        remainder: dict[Monomial, Coefficient] = {}
        for monomial, coeff in self._terms.items():
            powers = dict(monomial)
            if symbol not in powers:
                remainder[monomial] = coeff
                continue
            if powers[symbol] == 1:
                del powers[symbol]
            else:
                powers[symbol] -= 1
            quotient[tuple(sorted(powers.items(), key=lambda item: item[0].sort_key()))] = coeff
        return FieldExpr(quotient), FieldExpr(remainder)

    def evaluate(self, values: Mapping[JetSymbol, Any], lam: complex = 1.0) -> Any:
        """Numeric evaluation; array values broadcast, matrix coefficients lead the shape."""
        total_value: Any = 0
        for monomial, coeff in self._terms.items():
            mono: Any = 1.0
            for symbol, exp in monomial:
                if symbol not in values:
                    raise ValueError(f"No numeric value supplied for {symbol.name}")
                mono = mono * np.asarray(values[symbol]) ** exp
            cval = np.asarray(coeff.evaluate(lam))
            mono = np.asarray(mono)
            total_value = total_value + cval.reshape(cval.shape + (1,) * mono.ndim) * mono
        return total_value

    def to_sympy(self, lam: sympy.Symbol = LAMBDA_SYMBOL) -> Any:
        total_value: Any = sympy.Integer(0)
        for monomial, coeff in self._terms.items():
            mono = sympy.Mul(*[sympy.Symbol(s.name) ** e for s, e in monomial])
            total_value = total_value + coeff.to_sympy(lam) * mono
        return total_value

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction, Coefficient)):
            other = FieldExpr.lift(other)
        if not isinstance(other, FieldExpr):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(tuple(self._terms.items()))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for monomial, coeff in self._terms.items():
            ctext = str(coeff)
            if not monomial:
                text = ctext if " " not in ctext else f"({ctext})"
            elif ctext == "1":
                text = _format_monomial(monomial)
            elif ctext == "-1":
                text = f"-{_format_monomial(monomial)}"
            elif " " in ctext:
                text = f"({ctext})*{_format_monomial(monomial)}"
            else:
                text = f"{ctext}*{_format_monomial(monomial)}"
            if not parts:
                parts.append(text)
            elif text.startswith("-"):
                parts.append(f"- {text[1:]}")
            else:
                parts.append(f"+ {text}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"FieldExpr({self})"


def _check_acyclic(bindings: Mapping[JetSymbol, Any]) -> None:
    graph = {
        key: [s for s in FieldExpr.lift(value).symbols() if s in bindings and s != key]
        for key, value in bindings.items()
    }
    for key, value in bindings.items():
        if key in FieldExpr.lift(value).symbols() and FieldExpr.lift(value) != FieldExpr.symbol(key):
            raise CyclicBindingError([key, key])
    state: dict[JetSymbol, int] = {}

    def visit(node: JetSymbol, path: list[JetSymbol]) -> None:
        state[node] = 1
        for nxt in graph[node]:
            if state.get(nxt) == 1:
                raise CyclicBindingError(path[path.index(nxt):] + [nxt] if nxt in path else [node, nxt])
            if nxt not in state:
                visit(nxt, path + [nxt])
        state[node] = 2

    for key in sorted(graph, key=lambda s: s.sort_key()):
        if key not in state:
            visit(key, [key])


def symbol_derivative(symbol: JetSymbol, direction: str) -> FieldExpr:
    if symbol.kind == "coord":
        return FieldExpr.constant(1) if symbol.base == direction else FieldExpr()
    if symbol.kind == "field":
        return FieldExpr.symbol(prolong_symbol(symbol, direction))
    if symbol.kind == "xi":
        return FieldExpr.symbol(total(direction, symbol))
    raise JetOrderError(symbol.name)


def total_derivative(expr: FieldExpr, direction: str) -> FieldExpr:
    """Total derivative along x, y or t over fields up to first order."""
    if direction not in COORDINATES:
        raise ValueError(f"Unknown direction {direction!r}")
    result = FieldExpr()
    for symbol in sorted(expr.symbols(), key=lambda s: s.sort_key()):
        result = result + expr.differentiate(symbol) * symbol_derivative(symbol, direction)
    return result


def sym(symbol: JetSymbol) -> FieldExpr:
    return FieldExpr.symbol(symbol)


def dot(left: Iterable[FieldExpr], right: Iterable[FieldExpr]) -> FieldExpr:
    result = FieldExpr()
    for a, b in zip(left, right):
        result = result + a * b
    return result


def cross(a: tuple[FieldExpr, ...], b: tuple[FieldExpr, ...]) -> tuple[FieldExpr, FieldExpr, FieldExpr]:
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )
