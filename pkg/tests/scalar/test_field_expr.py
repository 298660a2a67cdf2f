import random

import numpy as np
import pytest
import sympy

from prolongation_kit.errors.exceptions import CoefficientMismatchError, CyclicBindingError, JetOrderError
from prolongation_kit.liealg.lie_element import X
from prolongation_kit.scalar.exact_scalar import LAMBDA
from prolongation_kit.scalar.field_expr import FieldExpr, cross, dot, sym, total_derivative
from prolongation_kit.scalar.jet import field, prolong_symbol, spin, total, xi

S1, S2, S3 = (sym(s) for s in spin())


def test_like_terms_combine_and_cancel():
    expr = S1 * S2 + S2 * S1 - 2 * (S1 * S2)
    assert expr.is_zero()
    assert expr == 0


def test_total_derivative_product_rule():
    expr = S1 * S2
    expected = sym(field(1, "x")) * S2 + S1 * sym(field(2, "x"))
    assert total_derivative(expr, "x") == expected


def test_total_derivative_marks_pseudopotential():
    assert total_derivative(sym(xi(1)), "y") == sym(total("y", xi(1)))


def test_third_order_jet_rejected():
    with pytest.raises(JetOrderError):
        prolong_symbol(field(1, "xx"), "y")
    with pytest.raises(JetOrderError):
        field(2, "xyt")


def test_mixed_partials_are_canonical():
    assert field(1, "yx") == field(1, "xy")


def test_substitute_replaces_symbols():
    out = (S1 * S1 + S3).substitute({spin()[0]: S2, spin()[2]: FieldExpr.constant(4)})
    assert out == S2 * S2 + 4


def test_cyclic_substitution_rejected():
    s1, s2, _ = spin()
    with pytest.raises(CyclicBindingError) as exc:
        S1.substitute({s1: S2, s2: S1})
    assert len(exc.value.cycle) >= 2


def test_coefficient_algebras_do_not_mix():
    lie = FieldExpr.constant(X(1))
    with pytest.raises(CoefficientMismatchError):
        lie + S1


def test_lie_coefficients_scale_by_scalars():
    expr = S1 * FieldExpr.constant(X(4)) * LAMBDA
    ((monomial, coeff),) = expr.items()
    assert monomial == ((spin()[0], 1),)
    assert coeff == X(4).scale(LAMBDA)


def test_cross_and_dot():
    s = (S1, S2, S3)
    assert dot(s, cross(s, s)).is_zero()
    assert cross(s, (FieldExpr.constant(0), FieldExpr.constant(0), FieldExpr.constant(1)))[0] == S2


def test_evaluate_broadcasts_arrays():
    values = {spin()[0]: np.array([1.0, 2.0]), spin()[1]: np.array([3.0, 4.0])}
    result = (S1 * S2 + 1).evaluate(values)
    assert np.allclose(result, [4.0, 9.0])


def test_collect_groups_by_selected_symbols():
    expr = S1 * sym(field(2, "x")) + S3 * sym(field(2, "x")) + S1
    groups = expr.collect(lambda s: s.kind == "field" and s.order == 1)
    assert groups[((field(2, "x"), 1),)] == S1 + S3
    assert groups[()] == S1


def test_differentiate_matches_sympy_on_random_polynomials():
    rng = random.Random(5)
    symbols = [field(1), field(2, "x"), field(3, "y")]
    for _ in range(25):
        expr = FieldExpr()
        for _ in range(rng.randint(1, 4)):
            term = FieldExpr.constant(rng.randint(-5, 5)) * LAMBDA ** rng.randint(-1, 1)
            for _ in range(rng.randint(0, 3)):
                term = term * sym(rng.choice(symbols))
            expr = expr + term
        for symbol in symbols:
            expected = sympy.diff(expr.to_sympy(), sympy.Symbol(symbol.name))
            assert sympy.expand(expr.differentiate(symbol).to_sympy() - expected) == 0


def test_differentiate_by_total_symbol_is_rejected():
    with pytest.raises(ValueError):
        S1.differentiate(total("x", xi(1)))
