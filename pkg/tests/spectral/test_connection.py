import pytest

from prolongation_kit.prolong.tower import omega_from_connection
from prolongation_kit.scalar.exact_scalar import I_UNIT, LAMBDA, ONE, ExactScalar
from prolongation_kit.scalar.field_expr import FieldExpr
from prolongation_kit.scalar.jet import coord, field, xi
from prolongation_kit.scalar.params import ModelParams
from prolongation_kit.settings.constants import SectionSign
from prolongation_kit.spectral.connection import connection_residuals, solve_connection
from prolongation_kit.spectral.export import SpectralDocument, compatibility_conditions, export_spectral_problem
from prolongation_kit.spectral.matrix2 import IDENTITY2, SIGMA1, SIGMA2, SIGMA3, Matrix2


def const(m: Matrix2) -> FieldExpr:
    return FieldExpr.constant(m)


def test_scalar_frame_solvable_when_h_matches():
    F, G = const(SIGMA1), const(SIGMA3)
    H = const(SIGMA3.scale(2) - SIGMA1)
    result = solve_connection(H, F, G, Matrix2.scalar(1), Matrix2.scalar(2))
    assert result.feasible
    c = result.components
    assert c.gauge_free
    assert c.gamma1 == G
    assert c.gamma2 == F
    assert c.gamma3.is_zero()
    assert all(r.is_zero() for r in connection_residuals(c, H, F, G).values())


def test_scalar_frame_obstruction():
    F, G, H = const(SIGMA1), const(SIGMA3), const(SIGMA2)
    result = solve_connection(H, F, G, Matrix2.scalar(1), Matrix2.scalar(2))
    assert not result.feasible
    assert result.obstruction == const(SIGMA2 - SIGMA3.scale(2) + SIGMA1)


def test_gauge_fixes_time_component():
    F, G = const(SIGMA1), const(SIGMA3)
    H = const(SIGMA3 - SIGMA1)
    gauge = const(SIGMA2)
    c = solve_connection(H, F, G, IDENTITY2, IDENTITY2, gauge=gauge).components
    assert c.gamma3 == gauge
    assert all(r.is_zero() for r in connection_residuals(c, H, F, G).values())


def test_noncommuting_frame_determines_gamma3():
    H = FieldExpr.symbol(field(3), SIGMA1) + const(SIGMA2)
    F = FieldExpr.symbol(field(1, "x"), SIGMA3)
    G = FieldExpr.symbol(field(2, "y"), SIGMA1.scale(LAMBDA))
    result = solve_connection(H, F, G, SIGMA1, SIGMA3)
    assert result.feasible
    assert not result.components.gauge_free
    assert all(r.is_zero() for r in connection_residuals(result.components, H, F, G).values())


def test_time_frame_must_be_identity():
    zero = FieldExpr()
    with pytest.raises(ValueError):
        solve_connection(zero, zero, zero, IDENTITY2, IDENTITY2, C=SIGMA3)


def test_constant_connection_compatibility():
    F, G = const(SIGMA2.scale(LAMBDA)), const(SIGMA1.scale(LAMBDA))
    H = G - F
    c = solve_connection(H, F, G, IDENTITY2, IDENTITY2).components
    conditions = compatibility_conditions(c, SectionSign.MINUS, ModelParams(1))
    assert sorted(conditions) == ["xt", "xy", "yt"]
    assert conditions["xy"] == const(SIGMA3.scale(I_UNIT * LAMBDA**2 * -2))
    assert conditions["xt"].is_zero()
    flipped = compatibility_conditions(c, SectionSign.PLUS, ModelParams(1))
    assert flipped["xy"] == -conditions["xy"]


def test_export_document_round_trips_through_json():
    F, G = const(SIGMA2), const(SIGMA1)
    c = solve_connection(G - F, F, G, IDENTITY2, IDENTITY2).components
    document = export_spectral_problem(c, SectionSign.MINUS)
    assert document.linear_system["xi_x"].startswith("-(")
    assert document.gauge_free
    assert SpectralDocument.model_validate_json(document.model_dump_json()) == document


NILPOTENT = Matrix2(0, 1, 0, 0)


def test_nilpotent_commutator_with_zero_rest_is_feasible():
    zero = FieldExpr()
    result = solve_connection(zero, zero, zero, NILPOTENT, SIGMA3)
    assert result.feasible
    assert result.obstruction.is_zero()
    c = result.components
    assert c.gauge_free
    assert c.kernel == Matrix2(-2, 0, 0, 0)
    assert c.gamma3.is_zero()


def test_nilpotent_commutator_obstruction_is_nonzero():
    zero = FieldExpr()
    result = solve_connection(const(SIGMA1), zero, zero, NILPOTENT, SIGMA3)
    assert not result.feasible
    assert not result.obstruction.is_zero()
    assert result.obstruction == const(Matrix2(2, 0, 0, 0))


def test_nilpotent_commutator_particular_solution():
    zero = FieldExpr()
    H = const(NILPOTENT)
    result = solve_connection(H, zero, zero, NILPOTENT, SIGMA3)
    assert result.feasible
    c = result.components
    assert c.gamma3 == const(Matrix2(0, 0, 0, ExactScalar.of(1) / 2))
    assert all(r.is_zero() for r in connection_residuals(c, H, zero, zero).values())
    shifted = solve_connection(H, zero, zero, NILPOTENT, SIGMA3, gauge=const(SIGMA2)).components
    assert shifted.gamma3 != c.gamma3
    assert all(r.is_zero() for r in connection_residuals(shifted, H, zero, zero).values())


def test_non_monomial_determinant_keeps_denominator():
    zero = FieldExpr()
    H = const(SIGMA1)
    B = SIGMA3 + SIGMA2.scale(LAMBDA)
    result = solve_connection(H, zero, zero, SIGMA1, B)
    assert result.feasible
    c = result.components
    assert not c.gauge_free
    assert c.denominator == ExactScalar.of(4) * (ONE + LAMBDA**2)
    assert all(r.is_zero() for r in connection_residuals(c, H, zero, zero).values())

    document = export_spectral_problem(c, SectionSign.MINUS, ModelParams(1))
    assert document.denominator == str(c.denominator)
    assert document.linear_system["xi_t"].endswith(f"/({c.denominator}) xi")


def test_connection_rebuilds_prolongation_form():
    H = FieldExpr.symbol(field(3), SIGMA1) + const(SIGMA2)
    F = FieldExpr.symbol(field(1, "x"), SIGMA3)
    G = FieldExpr.symbol(field(2, "y"), SIGMA1.scale(LAMBDA))
    c = solve_connection(H, F, G, SIGMA1, SIGMA3).components
    assert c.denominator == ONE

    omega = omega_from_connection(c.gamma1, c.gamma2, c.gamma3, const(c.A), const(c.B), const(IDENTITY2))
    x, y, t = coord("x"), coord("y"), coord("t")
    assert omega.coefficient((x, y)) == H
    assert omega.coefficient((y, t)) == F
    assert omega.coefficient((x, t)) == G
    assert omega.coefficient((x, xi(1))) == const(SIGMA1)
