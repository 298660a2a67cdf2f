import pytest

from prolongation_kit.errors.exceptions import UncoveredGeneratorError
from prolongation_kit.liealg.homomorphism import MatrixRep, verify_homomorphism
from prolongation_kit.liealg.sl2 import TWO_I_LAMBDA, sl2_quotient, structure_e
from prolongation_kit.prolong.solutions import build_reduction
from prolongation_kit.scalar.exact_scalar import I_UNIT, LAMBDA, ExactScalar
from prolongation_kit.scalar.field_expr import FieldExpr
from prolongation_kit.scalar.jet import field
from prolongation_kit.scalar.params import ModelParams
from prolongation_kit.settings.constants import BracketConvention, Reduction
from prolongation_kit.spectral.constraint import gradient_contraction, verify_fundamental_constraint
from prolongation_kit.spectral.matrix2 import SIGMA1, SIGMA2, SIGMA3, ZERO2
from prolongation_kit.spectral.pauli import instantiate_tower, pauli_rep


def s(k: int, derivs: str = "") -> FieldExpr:
    return FieldExpr.symbol(field(k, derivs))


@pytest.mark.parametrize("which", [Reduction.I, Reduction.II, Reduction.III, "alternative"])
def test_pauli_rep_is_a_homomorphism(which):
    report = verify_homomorphism(sl2_quotient(which), pauli_rep(which))
    assert report.entries
    assert report.passed, [e.label for e in report.failures()]


def test_closing_targets_follow_their_sources():
    rep = pauli_rep(Reduction.I)
    assert rep.images[3] == SIGMA1.scale(LAMBDA)
    assert rep.images[12] == SIGMA1.scale(LAMBDA * TWO_I_LAMBDA)
    assert rep.images[11] == SIGMA2.scale(LAMBDA * -TWO_I_LAMBDA)
    assert rep.images[1] == ZERO2


def test_uncovered_generator():
    with pytest.raises(UncoveredGeneratorError) as exc:
        verify_homomorphism(structure_e(), MatrixRep({1: SIGMA1}, ZERO2))
    assert exc.value.generator == 2


def test_instantiated_first_reduction():
    matrices = instantiate_tower(build_reduction(Reduction.I, ModelParams(1)), pauli_rep(Reduction.I))
    assert matrices.H == s(3) * FieldExpr.constant(SIGMA1.scale(LAMBDA)) + FieldExpr.constant(SIGMA2.scale(LAMBDA))
    assert matrices.name == "reduction (i)"


@pytest.mark.parametrize("gamma2", [1, -1])
def test_fundamental_constraint_matches_hand_expansion(gamma2):
    params = ModelParams(gamma2)
    matrices = instantiate_tower(build_reduction(Reduction.I, params), pauli_rep(Reduction.I))
    cross_x = s(2) * s(1, "x") - s(1) * s(2, "x")
    expected = cross_x * FieldExpr.constant(SIGMA2.scale(I_UNIT * LAMBDA**2 * 2 * gamma2)) + FieldExpr.constant(
        SIGMA2.scale(ExactScalar.of(-4) * LAMBDA**3)
    )
    assert gradient_contraction(matrices.F, "x").is_zero()
    assert gradient_contraction(matrices.G, "y").is_zero()
    assert verify_fundamental_constraint(matrices.F, matrices.G) == expected


def test_convention_flip_negates_commutator():
    matrices = instantiate_tower(build_reduction(Reduction.I, ModelParams(1)), pauli_rep(Reduction.I))
    gf = verify_fundamental_constraint(matrices.F, matrices.G, BracketConvention.GF)
    fg = verify_fundamental_constraint(matrices.F, matrices.G, BracketConvention.FG)
    assert fg == -gf
    assert not gf.is_zero()


def test_constant_commuting_pair_has_zero_residual():
    f = FieldExpr.constant(SIGMA3)
    assert verify_fundamental_constraint(f, f).is_zero()
