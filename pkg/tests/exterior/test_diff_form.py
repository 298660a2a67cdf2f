import random

import pytest

from prolongation_kit.errors.exceptions import FormDegreeError, JetOrderError
from prolongation_kit.exterior.diff_form import DiffForm, d, differential, dt, dx, dy, ext_d, section
from prolongation_kit.scalar.field_expr import sym
from prolongation_kit.scalar.jet import coord, field, total, xi


def test_wedge_is_antisymmetric():
    assert dx.wedge(dy) == -(dy.wedge(dx))
    assert dx.wedge(dx).is_zero()
    assert (dy ^ dt ^ dx) == dx.wedge(dy).wedge(dt)


def test_coefficient_respects_basis_order():
    form = DiffForm.basis(coord("x"), coord("y"), coeff=sym(field(1)))
    assert form.coefficient((coord("y"), coord("x"))) == -sym(field(1))


def test_degree_limit():
    factors = [coord("x"), coord("y"), coord("t"), field(1), field(2), field(3)]
    with pytest.raises(FormDegreeError) as exc:
        DiffForm.basis(*factors)
    assert exc.value.degree == 6


def test_second_order_fiber_has_no_basis_form():
    with pytest.raises(JetOrderError):
        d(field(1, "xx"))


def test_d_squared_vanishes():
    expr = sym(field(1)) * sym(field(2, "x")) + sym(xi(1)) * sym(field(3))
    assert ext_d(differential(expr)).is_zero()


def test_section_of_fiber_form():
    form = d(field(1)).wedge(dy).wedge(dt)
    volume = (coord("x"), coord("y"), coord("t"))
    assert section(form).coefficient(volume) == sym(total("x", field(1)))


def test_adding_mismatched_degrees_rejected():
    with pytest.raises(ValueError):
        dx + dx.wedge(dy)
    assert (dx + DiffForm.zero(2)) == dx


def test_d_squared_vanishes_on_random_polynomials():
    rng = random.Random(11)
    spins = [sym(field(k)) for k in (1, 2, 3)]
    for _ in range(20):
        expr = sym(field(1)) * 0
        for _ in range(rng.randint(1, 4)):
            term = rng.randint(-3, 3)
            for _ in range(rng.randint(1, 3)):
                term = term * rng.choice(spins)
            expr = expr + term
        assert ext_d(differential(expr)).is_zero()
