from fractions import Fraction

import pytest

from prolongation_kit.errors.exceptions import SingularMatrixError
from prolongation_kit.liealg.lie_element import X
from prolongation_kit.liealg.sl2 import closing_map, sl2_quotient
from prolongation_kit.prolong.constr import check_constr_relation
from prolongation_kit.prolong.solutions import build_reduction
from prolongation_kit.prolong.tower import build_ansatz, concrete_tower
from prolongation_kit.scalar.exact_scalar import I_UNIT, LAMBDA, ONE, ExactScalar
from prolongation_kit.scalar.field_expr import FieldExpr
from prolongation_kit.scalar.jet import field
from prolongation_kit.scalar.params import ModelParams
from prolongation_kit.settings.constants import BbarInterpretation, Reduction


def s(k: int, derivs: str = "") -> FieldExpr:
    return FieldExpr.symbol(field(k, derivs))


def _with_b(b: int, params: ModelParams):
    base = build_reduction(Reduction.I, params)
    return concrete_tower(params, base.h, base.f, base.g, B=[[b]], name=base.name)


@pytest.mark.parametrize("gamma2", [1, -1])
def test_first_reduction_difference_matches_hand_expansion(gamma2):
    params = ModelParams(gamma2)
    report = check_constr_relation(
        build_reduction(Reduction.I, params), sl2_quotient(Reduction.I), closing=closing_map(Reduction.I)
    )
    assert report.ab_passed
    assert report.bbar == ONE
    x45 = X(4) + X(5)
    cross_x = s(2) * s(1, "x") - s(1) * s(2, "x")
    expected = cross_x * FieldExpr.constant(x45.scale(I_UNIT * LAMBDA * 2 * gamma2)) + FieldExpr.constant(
        x45.scale(ExactScalar.of(-4) * LAMBDA**2)
    )
    assert report.difference == expected


def test_bbar_inverse_and_identity_interpretations():
    tower = _with_b(2, ModelParams(1))
    algebra, closing = sl2_quotient(Reduction.I), closing_map(Reduction.I)
    inverse = check_constr_relation(tower, algebra, BbarInterpretation.INVERSE, closing)
    identity = check_constr_relation(tower, algebra, BbarInterpretation.IDENTITY, closing)
    assert inverse.bbar == ExactScalar.of(Fraction(1, 2))
    assert identity.bbar == ONE
    assert inverse.difference != identity.difference


def test_singular_b_rejected():
    with pytest.raises(SingularMatrixError):
        check_constr_relation(_with_b(0, ModelParams(1)), sl2_quotient(Reduction.I))


def test_noncommuting_frame_reports_witness():
    ansatz, _ = build_ansatz(ModelParams(1, 2), A=[[0, 1], [0, 0]], B=[[1, 0], [0, -1]])
    report = check_constr_relation(ansatz)
    assert not report.ab_passed
    assert report.witness == "[0, -2; 0, 0]"
    assert report.difference is None
    assert report.note


def test_noncommuting_singular_b_reports_witness_instead_of_raising():
    ansatz, _ = build_ansatz(ModelParams(1, 2), A=[[0, 1], [0, 0]], B=[[1, 0], [0, 0]])
    report = check_constr_relation(ansatz)
    assert not report.ab_passed
    assert report.witness == "[0, -1; 0, 0]"
    assert report.bbar is None
    assert "[A,B]" in report.note


def test_singular_scalar_b_with_identity_bbar_needs_no_inverse():
    report = check_constr_relation(_with_b(0, ModelParams(1)), sl2_quotient(Reduction.I), BbarInterpretation.IDENTITY)
    assert report.ab_passed
    assert report.bbar == ONE
    assert report.difference is not None
