from __future__ import annotations

import logging
from typing import Optional

from prolongation_kit.contracts.ansatz import OmegaSource
from prolongation_kit.errors.exceptions import RewriteCycleError
from prolongation_kit.exterior.diff_form import DiffForm, sort_basis
from prolongation_kit.exterior.ideal import EdsIdeal, RewriteRule, rule_from_generator
from prolongation_kit.scalar.field_expr import FieldExpr
from prolongation_kit.scalar.jet import coord, field, xi
from prolongation_kit.scalar.params import ModelParams

logger = logging.getLogger(__name__)

MAX_PASSES = 200

DX, DY, DT = coord("x"), coord("y"), coord("t")


def omega_rules(ansatz: Optional[OmegaSource]) -> list[RewriteRule]:
    if ansatz is None:
        return []
    return [
        rule_from_generator(omega, (DT, xi(m)), f"omega{m}")
        for m, omega in enumerate(ansatz.omega_forms(), start=1)
    ]


def _rewrite_pass(form: DiffForm, rules: list[RewriteRule]) -> tuple[DiffForm, bool]:
    out = DiffForm.zero(form.degree)
    changed = False
    for basis, coeff in form.items():
        rule = next((r for r in rules if r.matches(basis)), None)
        if rule is None:
            out = out + DiffForm(form.degree, {basis: coeff})
        else:
            out = out + rule.apply(basis, coeff)
            changed = True
    return out, changed


def contract_constraint(form: DiffForm, params: ModelParams) -> DiffForm:
    """Trade Γ S·dS_x∧dy∧dt and Γ S·dS_y∧dx∧dt for their values modulo the differentiated constraints.

    Only coefficient vectors of the exact form factor·(ΓS) with one common factor are contracted;
    any other combination of the three monomials is returned unreduced.
    """
    if form.degree != 3:
        return form
    s1 = field(1)
    volume = (DX, DY, DT)
    result = form
    for derivs, others, sign in (("x", (DY, DT), -1), ("y", (DX, DT), 1)):
        keys = [sort_basis((field(k, derivs),) + others)[1] for k in (1, 2, 3)]
        vector = [result.coefficient(key) for key in keys]
        if all(v.is_zero() for v in vector):
            continue
        factor, remainder = vector[0].divide_by_symbol(s1)
        if factor.is_zero() or not remainder.is_zero():
            continue
        weights = params.weights
        if any(vector[k - 1] != factor * FieldExpr.symbol(field(k), weights[k - 1]) for k in (1, 2, 3)):
            continue
        contracted = FieldExpr()
        for k in (1, 2, 3):
            contracted = contracted + FieldExpr.symbol(field(k, derivs), weights[k - 1], power=2)
        kept = {basis: coeff for basis, coeff in result.items() if basis not in keys}
        result = DiffForm(3, kept) + DiffForm.basis(*volume, coeff=factor * contracted * sign)
        logger.debug("Contraction along %s applied with factor %s", derivs, factor)
    return result


def reduce_mod_ideal(form: DiffForm, ideal: EdsIdeal, ansatz: Optional[OmegaSource] = None) -> DiffForm:
    rules = list(ideal.rules) + omega_rules(ansatz)
    current = form
    seen = {current}
    trace: list[str] = []
    for _ in range(MAX_PASSES):
        current, changed = _rewrite_pass(current, rules)
        if not changed:
            break
        trace.append(str(current).replace("\n", " | "))
        if current in seen:
            raise RewriteCycleError(trace)
        seen.add(current)
    else:
        raise RewriteCycleError(trace)
    return contract_constraint(current, ideal.params)


def volume_form(coeff: FieldExpr | int = 1) -> DiffForm:
    return DiffForm.basis(DX, DY, DT, coeff=coeff)
