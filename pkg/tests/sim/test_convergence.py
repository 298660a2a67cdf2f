import logging

import pytest

from prolongation_kit.scalar.params import ModelParams
from prolongation_kit.sim.convergence import FLOOR, ORDER_WINDOW, convergence_study, fit_order


def test_fit_order_recovers_quadratic_slope():
    order = fit_order([1.0, 0.5, 0.25], [1.0, 0.25, 0.0625])

    assert order.slope == pytest.approx(2.0)
    assert order.label == "2.000"
    assert order.monotone


def test_fit_order_flags_non_monotone_errors(caplog):
    caplog.set_level(logging.WARNING)

    order = fit_order([1.0, 0.5, 0.25], [1e-3, 2e-3, 5e-4])

    assert not order.monotone
    assert "no monótonos" in caplog.text


def test_fit_order_reports_floor_below_rounding():
    order = fit_order([1.0, 0.5, 0.25], [1e-14, 1e-15, 0.0])

    assert order.slope is None
    assert order.label == FLOOR


@pytest.mark.parametrize("grids", [(32, 64), (32, 48, 96)])
def test_grids_must_refine_by_two(grids):
    with pytest.raises(ValueError):
        convergence_study("plane_wave", grids)


def test_plane_wave_converges_at_second_order():
    study = convergence_study("plane_wave", [32, 64, 128], ModelParams(gamma2=1), final_time=0.1)

    assert 1.8 <= study.monitors["solution"].slope <= 2.2
    assert 1.8 <= study.monitors["pde"].slope <= 2.2
    assert study.monitors["constraint"].label == FLOOR
    assert study.flagged == []


def test_constant_field_sits_at_rounding_floor():
    study = convergence_study("constant", [8, 16, 32], ModelParams(gamma2=-1), final_time=0.01)

    assert study.monitors["solution"].label == FLOOR
    assert study.monitors["pde"].label == FLOOR


def test_first_order_slope_falls_outside_window():
    order = fit_order([1.0, 0.5, 0.25], [0.4, 0.2, 0.1])

    assert order.monotone
    assert order.slope == pytest.approx(1.0)
    assert not order.in_window
    assert not order.passed
    assert ORDER_WINDOW == (1.8, 2.2)


def test_random_smooth_has_no_solution_monitor():
    study = convergence_study("random_smooth", [8, 16, 32], ModelParams(gamma2=1), final_time=0.001)

    assert sorted(study.monitors) == ["constraint", "pde"]
