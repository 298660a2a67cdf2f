import pytest

from prolongation_kit.errors.exceptions import JetOrderError
from prolongation_kit.scalar.field_expr import FieldExpr
from prolongation_kit.scalar.jet import field, xi
from prolongation_kit.scalar.params import ModelParams
from prolongation_kit.sim.residuals import constraint_monitor, measure_residuals, pde_monitors
from prolongation_kit.sim.spin_field import init_field


@pytest.fixture
def params():
    return ModelParams(gamma2=1)


def _monitors(params):
    return {**pde_monitors(params), **constraint_monitor(params)}


def test_constant_field_has_zero_residuals(params):
    f = init_field("constant", params, nx=8)

    report = measure_residuals(f, _monitors(params))

    assert report.paths_agree
    for k in (1, 2, 3):
        assert report.monitors[f"pde_{k}"].max_abs == 0.0
    assert report.monitors["constraint"].max_abs < 1e-14


def test_plane_wave_residuals_shrink_with_refinement(params):
    coarse = init_field("plane_wave", params, nx=32)
    fine = init_field("plane_wave", params, nx=64)

    def worst(f):
        x, y = f.coordinates()
        report = measure_residuals(f, pde_monitors(params), f.wave.time_derivative(x, y, f.t))
        assert report.paths_agree
        return max(m.max_abs for m in report.monitors.values())

    assert worst(fine) < worst(coarse) / 3


def test_time_derivative_from_integrator_is_used_when_missing(params):
    f = init_field("plane_wave", params, nx=32)

    report = measure_residuals(f, pde_monitors(params))

    assert report.t == 0.0
    assert max(m.max_abs for m in report.monitors.values()) < 1e-2


def test_monitor_with_non_field_symbol_is_rejected(params):
    f = init_field("constant", params, nx=8)

    with pytest.raises(JetOrderError):
        measure_residuals(f, {"bad": FieldExpr.symbol(xi(1))})


def test_monitor_with_unsupported_jet_is_rejected(params):
    f = init_field("constant", params, nx=8)

    with pytest.raises(JetOrderError):
        measure_residuals(f, {"bad": FieldExpr.symbol(field(1, "tt"))})
