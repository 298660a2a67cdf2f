from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from prolongation_kit.liealg.lie_element import LieElement, X
from prolongation_kit.prolong.determining import DeterminingEquation
from prolongation_kit.prolong.tower import Tower, concrete_tower
from prolongation_kit.registry.reduction_registry import get_reduction_config
from prolongation_kit.scalar.exact_scalar import ExactScalar
from prolongation_kit.scalar.field_expr import FieldExpr, Monomial, cross, dot
from prolongation_kit.scalar.jet import JetSymbol, field as jet_field, unknown
from prolongation_kit.scalar.params import ModelParams
from prolongation_kit.settings.constants import BracketConvention, KChoice, Reduction

logger = logging.getLogger(__name__)

HALF = ExactScalar.of(Fraction(1, 2))
OPAQUE_K = 13


def _lie(symbol: JetSymbol, element: LieElement) -> FieldExpr:
    return FieldExpr.symbol(symbol, element)


def _spin(derivs: str = "") -> tuple[FieldExpr, ...]:
    return tuple(FieldExpr.symbol(jet_field(k, derivs)) for k in (1, 2, 3))


def general_solution(params: ModelParams, k_choice: KChoice = KChoice.BRACKET) -> Tower:
    """H = X·S + X4, F = −((ΓX)×S)·S_x + K, G = ((ΓX)×S)·S_y + K̄."""
    weights = params.weights
    gamma_x = tuple(FieldExpr.constant(X(a, weights[a - 1])) for a in (1, 2, 3))
    S = _spin()
    rotated = cross(gamma_x, S)
    H = sum((_lie(jet_field(a), X(a)) for a in (1, 2, 3)), FieldExpr()) + FieldExpr.constant(X(4))
    K = FieldExpr.constant(X(4).commutator(X(5)) if k_choice == KChoice.BRACKET else X(OPAQUE_K))
    Kbar = (
        _lie(jet_field(1), -X(2).commutator(X(3)))
        + _lie(jet_field(2), X(1).commutator(X(3)))
        + _lie(jet_field(3), X(1).commutator(X(2)).scale(-params.gamma2_scalar))
        + FieldExpr.constant(X(5))
    )
    F = -dot(rotated, _spin("x")) + K
    G = dot(rotated, _spin("y")) + Kbar
    return concrete_tower(params, H, F, G, K=K, Kbar=Kbar, name="general")


def build_reduction(which: str | Reduction, params: ModelParams, k: Optional[LieElement] = None) -> Tower:
    config = get_reduction_config(which)
    frame, spin, (a, b) = config["frame"], config["spin"], config["cross_pair"]
    weight = params.weights[frame - 1]
    S, Sx, Sy = _spin(), _spin("x"), _spin("y")
    xf = FieldExpr.constant(X(frame))
    K = FieldExpr.constant(k if k is not None else X(config["k_generator"]))
    Kbar = FieldExpr.constant(X(5))
    H = S[spin - 1] * xf + FieldExpr.constant(X(4))
    G = (S[a - 1] * Sy[b - 1] - S[b - 1] * Sy[a - 1]) * weight * xf + Kbar
    F = (S[b - 1] * Sx[a - 1] - S[a - 1] * Sx[b - 1]) * weight * xf + K
    name = which.value if isinstance(which, Reduction) else which
    return concrete_tower(params, H, F, G, K=K, Kbar=Kbar, name=f"reduction ({name})")


@dataclass(frozen=True)
class EmittedRelation:
    monomial: Monomial
    element: LieElement
    origin: str

    @property
    def first_jet_degree(self) -> int:
        return sum(e for s, e in self.monomial if s.kind == "field" and s.order == 1)

    @property
    def monomial_text(self) -> str:
        return "*".join(s.name if e == 1 else f"{s.name}^{e}" for s, e in self.monomial) or "1"


@dataclass
class SolutionCheck:
    relations: list[EmittedRelation] = field(default_factory=list)
    failures: list[EmittedRelation] = field(default_factory=list)
    deferred: list[DeterminingEquation] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def _concrete(symbol: JetSymbol, tower: Tower) -> FieldExpr:
    values = {"H": tower.h, "F": tower.f, "G": tower.g}
    base = values[symbol.base]
    return base if symbol.wrt is None else base.differentiate(symbol.wrt)


def _lie_residual(
    eq: DeterminingEquation, tower: Tower, convention: BracketConvention
) -> tuple[FieldExpr, FieldExpr]:
    """Lie-valued residual and the pure jet part that no tower can absorb."""
    result = FieldExpr()
    leftover = FieldExpr()
    for monomial, coeff in eq.residual.items():
        unknowns = [(s, e) for s, e in monomial if s.kind == "unknown"]
        jets = FieldExpr({tuple((s, e) for s, e in monomial if s.kind != "unknown"): coeff})
        if not unknowns:
            leftover = leftover + jets
            continue
        if sum(e for _, e in unknowns) == 1:
            result = result + _concrete(unknowns[0][0], tower) * jets
            continue
        if sum(e for _, e in unknowns) != 2 or len(unknowns) != 2:
            raise ValueError(f"Unexpected unknown structure in {eq.origin}")
        pseudo = [s for s, _ in unknowns if s.wrt is not None and s.wrt.kind == "xi"]
        plain = [s for s, _ in unknowns if s.wrt is None]
        if len(pseudo) != 1 or len(plain) != 1:
            raise ValueError(f"Unexpected unknown pair in {eq.origin}")
        p_value = _concrete(unknown(pseudo[0].base, pseudo[0].index), tower)
        q_value = _concrete(plain[0], tower)
        pairing = q_value.pair(p_value, lambda left, right: left.commutator(right))
        if convention == BracketConvention.FG:
            pairing = -pairing
        result = result + pairing * jets * HALF
    return result, leftover


def verify_solution_form(
    tower: Tower,
    equations: list[DeterminingEquation],
    convention: BracketConvention = BracketConvention.GF,
) -> SolutionCheck:
    """Substitute a concrete tower; per jet monomial, bracket-only coefficients become relations."""
    check = SolutionCheck()
    for eq in equations:
        if eq.label == "commutator_AB":
            continue
        if eq.label == "frame":
            check.deferred.append(eq)
            continue
        residual, leftover = _lie_residual(eq, tower, convention)
        for monomial, coeff in leftover.items():
            check.failures.append(EmittedRelation(monomial, LieElement(), f"{eq.origin} (scalar {coeff})"))
            logger.warning("Término escalar sin absorber en %s: %s", eq.origin, coeff)
        for monomial, coeff in residual.items():
            entry = EmittedRelation(monomial, coeff, eq.origin)
            if any(isinstance(term, int) for term, _ in coeff.items()):
                check.failures.append(entry)
                logger.warning("Fallo estructural en %s: %s", eq.origin, coeff)
            else:
                check.relations.append(entry)
    logger.info(
        "Forma de solución: %d relaciones, %d fallos, %d diferidas",
        len(check.relations),
        len(check.failures),
        len(check.deferred),
    )
    return check
