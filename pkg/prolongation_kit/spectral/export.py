from __future__ import annotations

import logging

from pydantic import BaseModel

from prolongation_kit.scalar.exact_scalar import ONE
from prolongation_kit.scalar.field_expr import FieldExpr, cross, total_derivative
from prolongation_kit.scalar.jet import field, spin
from prolongation_kit.scalar.params import ModelParams
from prolongation_kit.settings.constants import SectionSign
from prolongation_kit.spectral.connection import ConnectionComponents
from prolongation_kit.spectral.constraint import matrix_bracket

logger = logging.getLogger(__name__)

PAIRS = (("x", "y"), ("x", "t"), ("y", "t"))


class SpectralDocument(BaseModel):
    section_sign: SectionSign
    linear_system: dict[str, str]
    compatibility: dict[str, str]
    gauge_free: bool = False
    denominator: str = "1"
    compatibility_denominator: str = "1"


def time_bindings(params: ModelParams) -> dict:
    """S_k_t on solutions: Γ_k (S × (S_xx + S_yy))_k."""
    S = tuple(FieldExpr.symbol(s) for s in spin(""))
    laplacian = tuple(FieldExpr.symbol(field(k, "xx")) + FieldExpr.symbol(field(k, "yy")) for k in (1, 2, 3))
    rhs = cross(S, laplacian)
    return {field(k, "t"): rhs[k - 1] * params.weights[k - 1] for k in (1, 2, 3)}


def compatibility_conditions(
    c: ConnectionComponents, sign: SectionSign = SectionSign.MINUS, params: ModelParams | None = None
) -> dict[str, FieldExpr]:
    """∂_bΓ_a − ∂_aΓ_b + s[Γ_a,Γ_b] for each coordinate pair, multiplied by the squared denominator."""
    s = -1 if sign == SectionSign.MINUS else 1
    gammas = {"x": c.gamma1, "y": c.gamma2, "t": c.gamma3}
    bindings = time_bindings(params or ModelParams())
    out = {}
    for a, b in PAIRS:
        expr = (
            (total_derivative(gammas[a], b) - total_derivative(gammas[b], a)) * c.denominator
            + matrix_bracket(gammas[a], gammas[b]) * s
        )
        out[f"{a}{b}"] = expr.substitute(bindings)
    return out


def export_spectral_problem(
    c: ConnectionComponents, sign: SectionSign = SectionSign.MINUS, params: ModelParams | None = None
) -> SpectralDocument:
    prefix = "-" if sign == SectionSign.MINUS else ""
    over = "" if c.denominator == ONE else f"/({c.denominator})"
    system = {
        f"xi_{direction}": f"{prefix}({gamma}){over} xi"
        for direction, gamma in (("x", c.gamma1), ("y", c.gamma2), ("t", c.gamma3))
    }
    compat = {pair: str(expr) for pair, expr in compatibility_conditions(c, sign, params).items()}
    logger.info("Problema espectral exportado con signo %s", sign.value)
    return SpectralDocument(
        section_sign=sign,
        linear_system=system,
        compatibility=compat,
        gauge_free=c.gauge_free,
        denominator=str(c.denominator),
        compatibility_denominator=str(c.denominator * c.denominator),
    )
