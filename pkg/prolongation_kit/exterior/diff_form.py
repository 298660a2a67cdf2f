from __future__ import annotations

from typing import Callable, Iterable, Iterator, Mapping, Optional

from prolongation_kit.errors.exceptions import FormDegreeError, JetOrderError
from prolongation_kit.scalar.field_expr import FieldExpr
from prolongation_kit.scalar.jet import COORDINATES, JetSymbol, coord, field, total, unknown, xi
from prolongation_kit.settings.constants import MAX_FORM_DEGREE

Basis = tuple[JetSymbol, ...]


def basis_key(symbol: JetSymbol) -> tuple:
    """Fixed 1-form order: dx, dy, dt, dS_i, dS_i_x, dS_i_y, dxi_m."""
    if symbol.kind == "coord":
        return (0, COORDINATES.index(symbol.base))
    if symbol.kind == "field":
        if symbol.derivs not in ("", "x", "y"):
            raise JetOrderError(symbol.name)
        return (1, ("", "x", "y").index(symbol.derivs), symbol.index)
    if symbol.kind == "xi":
        return (2, symbol.index)
    raise ValueError(f"{symbol.name} carries no basis 1-form")


def sort_basis(factors: Iterable[JetSymbol]) -> tuple[int, Basis]:
    """Sign of the sorting permutation and the sorted tuple; sign 0 on a repeated factor."""
    items = list(factors)
    if len(set(items)) != len(items):
        return 0, ()
    sign = 1
    keys = [basis_key(s) for s in items]
    for i in range(len(items)):
        for j in range(len(items) - 1 - i):
            if keys[j] > keys[j + 1]:
                keys[j], keys[j + 1] = keys[j + 1], keys[j]
                items[j], items[j + 1] = items[j + 1], items[j]
                sign = -sign
    return sign, tuple(items)


def basis_name(basis: Basis) -> str:
    return "∧".join(f"d{s.name}" for s in basis) if basis else "1"


class DiffForm:
    """Homogeneous exterior form over jet coordinates with FieldExpr coefficients."""

    __slots__ = ("degree", "_terms")

    def __init__(self, degree: int, terms: Optional[Mapping[Basis, FieldExpr]] = None) -> None:
        if degree > MAX_FORM_DEGREE:
            raise FormDegreeError(degree, MAX_FORM_DEGREE)
        self.degree = degree
        collected: dict[Basis, FieldExpr] = {}
        for basis, coeff in (terms or {}).items():
            if len(basis) != degree:
                raise ValueError(f"Basis {basis_name(basis)} does not have degree {degree}")
            sign, ordered = sort_basis(basis)
            if sign == 0:
                continue
            value = coeff if sign > 0 else -coeff
            collected[ordered] = collected[ordered] + value if ordered in collected else value
        ordered_keys = sorted(collected, key=lambda b: tuple(basis_key(s) for s in b))
        self._terms = {b: collected[b] for b in ordered_keys if not collected[b].is_zero()}

    @classmethod
    def zero(cls, degree: int) -> "DiffForm":
        return cls(degree)

    @classmethod
    def function(cls, coeff: FieldExpr) -> "DiffForm":
        return cls(0, {(): coeff})

    @classmethod
    def basis(cls, *factors: JetSymbol, coeff: FieldExpr | int = 1) -> "DiffForm":
        return cls(len(factors), {tuple(factors): FieldExpr.lift(coeff)})

    def items(self) -> Iterator[tuple[Basis, FieldExpr]]:
        return iter(self._terms.items())

    def coefficient(self, basis: Basis) -> FieldExpr:
        sign, ordered = sort_basis(basis)
        value = self._terms.get(ordered, FieldExpr())
        return value if sign >= 0 else -value

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def _check_degree(self, other: "DiffForm") -> None:
        if other.degree != self.degree and not (self.is_zero() or other.is_zero()):
            raise ValueError(f"Cannot add forms of degree {self.degree} and {other.degree}")

    def __add__(self, other: "DiffForm") -> "DiffForm":
        self._check_degree(other)
        degree = self.degree if not self.is_zero() else other.degree
        out = dict(self._terms)
        for basis, coeff in other._terms.items():
            out[basis] = out[basis] + coeff if basis in out else coeff
        return DiffForm(degree, out)

    def __neg__(self) -> "DiffForm":
        return DiffForm(self.degree, {b: -c for b, c in self._terms.items()})

    def __sub__(self, other: "DiffForm") -> "DiffForm":
        return self + (-other)

    def scale(self, factor: FieldExpr | int) -> "DiffForm":
        factor = FieldExpr.lift(factor)
        return DiffForm(self.degree, {b: factor * c for b, c in self._terms.items()})

    def map_coefficients(self, fn: Callable[[FieldExpr], FieldExpr]) -> "DiffForm":
        return DiffForm(self.degree, {b: fn(c) for b, c in self._terms.items()})

    def substitute(self, bindings: Mapping[JetSymbol, FieldExpr]) -> "DiffForm":
        return self.map_coefficients(lambda c: c.substitute(bindings))

    def wedge(self, other: "DiffForm") -> "DiffForm":
        degree = self.degree + other.degree
        if degree > MAX_FORM_DEGREE:
            raise FormDegreeError(degree, MAX_FORM_DEGREE)
        out: dict[Basis, FieldExpr] = {}
        for b1, c1 in self._terms.items():
            for b2, c2 in other._terms.items():
                sign, ordered = sort_basis(b1 + b2)
                if sign == 0:
                    continue
                value = c1 * c2 if sign > 0 else -(c1 * c2)
                out[ordered] = out[ordered] + value if ordered in out else value
        return DiffForm(degree, out)

    def __xor__(self, other: "DiffForm") -> "DiffForm":
        return self.wedge(other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DiffForm):
            return NotImplemented
        if self.is_zero() and other.is_zero():
            return True
        return self.degree == other.degree and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.degree, tuple(self._terms.items())))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return "\n".join(f"{coeff} * {basis_name(basis)}" for basis, coeff in self._terms.items())

    def __repr__(self) -> str:
        return f"DiffForm(degree={self.degree}, terms={len(self._terms)})"


def d(symbol: JetSymbol) -> DiffForm:
    return DiffForm.basis(symbol)


dx, dy, dt = (d(coord(c)) for c in COORDINATES)


def fiber_symbols(pseudopotentials: int) -> list[JetSymbol]:
    fibers = [field(i, derivs) for derivs in ("", "x", "y") for i in (1, 2, 3)]
    return fibers + [xi(m) for m in range(1, pseudopotentials + 1)]


def _pseudopotential_count(form: DiffForm) -> int:
    indices = [s.index for basis, coeff in form.items() for s in (*basis, *coeff.symbols()) if s.kind == "xi"]
    for _, coeff in form.items():
        indices += [s.wrt.index for s in coeff.symbols() if s.wrt is not None and s.wrt.kind == "xi"]
    return max(indices, default=1)


def differential(expr: FieldExpr, pseudopotentials: int = 1) -> DiffForm:
    """d of a 0-form; unknown functions expand through their first partials."""
    result = DiffForm.zero(1)
    for symbol in sorted(expr.symbols(), key=lambda s: s.sort_key()):
        partial = expr.differentiate(symbol)
        if symbol.kind == "unknown":
            if symbol.wrt is not None:
                raise JetOrderError(symbol.name)
            for fiber in fiber_symbols(pseudopotentials):
                result = result + d(fiber).scale(partial * FieldExpr.symbol(unknown(symbol.base, symbol.index, fiber)))
        elif symbol.kind == "total":
            raise ValueError(f"{symbol.name} belongs to a sectioned form and has no differential")
        else:
            result = result + d(symbol).scale(partial)
    return result


def ext_d(form: DiffForm, pseudopotentials: Optional[int] = None) -> DiffForm:
    n = pseudopotentials or _pseudopotential_count(form)
    result = DiffForm.zero(form.degree + 1)
    for basis, coeff in form.items():
        result = result + differential(coeff, n).wedge(DiffForm.basis(*basis))
    return result


def section(form: DiffForm) -> DiffForm:
    """Pull back to a formal solution: each fiber differential becomes D_x s dx + D_y s dy + D_t s dt."""
    result = DiffForm.zero(form.degree)
    for basis, coeff in form.items():
        term = DiffForm.function(coeff)
        for symbol in basis:
            if symbol.kind == "coord":
                factor = d(symbol)
            else:
                factor = DiffForm.zero(1)
                for direction in COORDINATES:
                    factor = factor + d(coord(direction)).scale(FieldExpr.symbol(total(direction, symbol)))
            term = term.wedge(factor)
        result = result + term
    return result
