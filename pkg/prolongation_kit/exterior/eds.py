from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Mapping, Optional

from prolongation_kit.contracts.ansatz import OmegaSource
from prolongation_kit.exterior.diff_form import DiffForm, d, differential, ext_d, section
from prolongation_kit.exterior.ideal import EdsGenerator, EdsIdeal, RewriteRule, rule_from_generator
from prolongation_kit.exterior.rewrite import DT, DX, DY, reduce_mod_ideal
from prolongation_kit.scalar.field_expr import FieldExpr, cross, dot, sym
from prolongation_kit.scalar.jet import JetSymbol, field, total
from prolongation_kit.scalar.params import ModelParams
from prolongation_kit.settings.constants import Status

logger = logging.getLogger(__name__)

VOLUME = (DX, DY, DT)


def _spin(params: ModelParams, derivs: str = "", weighted: bool = False) -> tuple[FieldExpr, ...]:
    weights = params.weights if weighted else (1, 1, 1)
    return tuple(FieldExpr.symbol(field(k, derivs), weights[k - 1]) for k in (1, 2, 3))


def build_eds(params: ModelParams) -> EdsIdeal:
    """The eleven generators θ1, θ2, θ3 (componentwise), β1 and β2 with their rewrite rules."""
    dxf, dyf, dtf = d(DX), d(DY), d(DT)
    S = _spin(params)
    gamma_s = _spin(params, weighted=True)
    generators: list[EdsGenerator] = []
    rules: list[RewriteRule] = []

    for k in (1, 2, 3):
        form = d(field(k)).wedge(dyf).wedge(dtf) - DiffForm.basis(*VOLUME, coeff=sym(field(k, "x")))
        generators.append(EdsGenerator(f"theta1_{k}", form, "theta1"))
        rules.append(rule_from_generator(form, (field(k), DY, DT), f"theta1_{k}"))
    for k in (1, 2, 3):
        form = d(field(k)).wedge(dxf).wedge(dtf) + DiffForm.basis(*VOLUME, coeff=sym(field(k, "y")))
        generators.append(EdsGenerator(f"theta2_{k}", form, "theta2"))
        rules.append(rule_from_generator(form, (field(k), DX, DT), f"theta2_{k}"))

    laplace_forms = [
        d(field(k, "x")).wedge(dyf).wedge(dtf) - d(field(k, "y")).wedge(dxf).wedge(dtf) for k in (1, 2, 3)
    ]
    for i in (1, 2, 3):
        j, k = i % 3 + 1, (i + 1) % 3 + 1
        rotation = laplace_forms[k - 1].scale(S[j - 1]) - laplace_forms[j - 1].scale(S[k - 1])
        form = d(field(i)).wedge(dxf).wedge(dyf).scale(params.weights[i - 1]) - rotation
        generators.append(EdsGenerator(f"theta3_{i}", form, "theta3"))
        rules.append(rule_from_generator(form, (field(i), DX, DY), f"theta3_{i}"))

    generators.append(
        EdsGenerator("beta1", differential(dot(gamma_s, _spin(params, "x"))).wedge(dyf).wedge(dtf), "beta1")
    )
    generators.append(
        EdsGenerator("beta2", differential(dot(gamma_s, _spin(params, "y"))).wedge(dxf).wedge(dtf), "beta2")
    )

    for derivs in ("x", "y"):
        for k in (1, 2, 3):
            rules.append(RewriteRule((DX, DY, DT, field(k, derivs)), DiffForm.zero(4), "constraint"))

    logger.info("EDS construida con %d generadores y %d reglas", len(generators), len(rules))
    return EdsIdeal(params, tuple(generators), tuple(rules))


def pde_bindings(params: ModelParams) -> dict[JetSymbol, FieldExpr]:
    """Total-derivative symbols expressed through jets on solutions of the spin model."""
    S = _spin(params)
    laplacian = tuple(a + b for a, b in zip(_spin(params, "xx"), _spin(params, "yy")))
    rhs = cross(S, laplacian)
    bindings: dict[JetSymbol, FieldExpr] = {}
    for k in (1, 2, 3):
        s = field(k)
        bindings[total("x", s)] = sym(field(k, "x"))
        bindings[total("y", s)] = sym(field(k, "y"))
        bindings[total("t", s)] = rhs[k - 1] * params.weights[k - 1]
        for first in ("x", "y"):
            for direction in ("x", "y", "t"):
                bindings[total(direction, field(k, first))] = sym(field(k, first + direction))
    return bindings


def constraint_scalars(params: ModelParams) -> tuple[FieldExpr, FieldExpr]:
    """Second derivatives of (ΓS)·S = γ² along x and y, halved."""
    gamma_s = _spin(params, weighted=True)
    out = []
    for direction in ("x", "y"):
        first = _spin(params, direction)
        gamma_first = _spin(params, direction, weighted=True)
        out.append(dot(gamma_s, _spin(params, direction * 2)) + dot(gamma_first, first))
    return out[0], out[1]


def sectioned_equations(ideal: EdsIdeal) -> dict[str, FieldExpr]:
    """Coefficient of dx∧dy∧dt in each sectioned generator, before any binding."""
    return {gen.name: section(gen.form).coefficient(VOLUME) for gen in ideal.generators}


@dataclass(frozen=True)
class GeneratorCheck:
    name: str
    section_residual: FieldExpr
    section_status: Status
    closure_residual: DiffForm
    closure_status: Status
    note: str = ""

    @property
    def passed(self) -> bool:
        return self.section_status == Status.PASS and self.closure_status == Status.PASS


def verify_eds_closed(
    ideal: EdsIdeal, bindings: Optional[Mapping[JetSymbol, FieldExpr]] = None
) -> list[GeneratorCheck]:
    bindings = bindings if bindings is not None else pde_bindings(ideal.params)
    c_xx, c_yy = constraint_scalars(ideal.params)
    checks: list[GeneratorCheck] = []
    for gen in ideal.generators:
        sectioned = section(gen.form)
        residual = FieldExpr()
        for _, coeff in sectioned.items():
            residual = residual + coeff.substitute(bindings)
        note = ""
        if residual.is_zero():
            section_status = Status.PASS
        elif residual in (c_xx, -c_xx, c_yy, -c_yy):
            section_status = Status.PASS
            note = "mod constraint"
        else:
            section_status = Status.FAIL
        closure = reduce_mod_ideal(ext_d(gen.form), ideal)
        closure_status = Status.PASS if closure.is_zero() else Status.FAIL
        if section_status == Status.FAIL or closure_status == Status.FAIL:
            logger.warning("Generador %s no se anula: sección=%s, clausura=%s", gen.name, residual, closure)
        checks.append(GeneratorCheck(gen.name, residual, section_status, closure, closure_status, note))
    return checks


def further_constraint(ansatz: OmegaSource, ideal: EdsIdeal) -> list[DiffForm]:
    """dΩ reduced by the EDS rules only, one 3-form per pseudopotential."""
    return [reduce_mod_ideal(ext_d(omega, ansatz.pseudopotential_dim), ideal) for omega in ansatz.omega_forms()]


def integrability_condition(ansatz: OmegaSource, ideal: EdsIdeal) -> list[DiffForm]:
    """dΩ reduced by the EDS rules and the dt∧dξ substitution."""
    return [
        reduce_mod_ideal(ext_d(omega, ansatz.pseudopotential_dim), ideal, ansatz)
        for omega in ansatz.omega_forms()
    ]
