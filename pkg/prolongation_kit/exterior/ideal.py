from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from prolongation_kit.exterior.diff_form import Basis, DiffForm, basis_name, sort_basis
from prolongation_kit.scalar.field_expr import FieldExpr
from prolongation_kit.scalar.params import ModelParams


@dataclass(frozen=True)
class EdsGenerator:
    name: str
    form: DiffForm
    family: str = "custom"


@dataclass(frozen=True)
class RewriteRule:
    """Replaces a basis monomial containing ``lead`` by ``replacement`` wedged with the leftover factors."""

    lead: Basis
    replacement: DiffForm
    source: str

    def matches(self, basis: Basis) -> bool:
        return set(self.lead) <= set(basis)

    def apply(self, basis: Basis, coeff: FieldExpr) -> DiffForm:
        rest = tuple(s for s in basis if s not in self.lead)
        sign, _ = sort_basis(self.lead + rest)
        rewritten = self.replacement.wedge(DiffForm.basis(*rest))
        return rewritten.scale(coeff if sign > 0 else -coeff)

    def __str__(self) -> str:
        return f"{basis_name(self.lead)} -> {self.replacement} [{self.source}]"


def rule_from_generator(form: DiffForm, lead: Basis, source: str) -> RewriteRule:
    """Solve ``form ≡ 0`` for its ``lead`` monomial; the lead coefficient must be an invertible constant."""
    _, ordered = sort_basis(lead)
    coeff = form.coefficient(ordered)
    constant = coeff.constant_term()
    if len(coeff) != 1 or constant is None:
        raise ValueError(f"Lead {basis_name(ordered)} of {source} has non-constant coefficient {coeff}")
    remainder = form - DiffForm.basis(*ordered, coeff=coeff)
    inverse = FieldExpr.constant(constant.inverse())
    return RewriteRule(lead=ordered, replacement=(-remainder).scale(inverse), source=source)


@dataclass(frozen=True)
class EdsIdeal:
    params: ModelParams
    generators: tuple[EdsGenerator, ...]
    rules: tuple[RewriteRule, ...] = field(default_factory=tuple)

    def __len__(self) -> int:
        return len(self.generators)

    def generator(self, name: str) -> Optional[EdsGenerator]:
        for gen in self.generators:
            if gen.name == name:
                return gen
        return None

    def replace_generator(self, name: str, form: DiffForm) -> "EdsIdeal":
        generators = tuple(
            EdsGenerator(g.name, form, g.family) if g.name == name else g for g in self.generators
        )
        return EdsIdeal(self.params, generators, self.rules)
