import pytest

from prolongation_kit.errors.exceptions import InconsistentRelationError
from prolongation_kit.exterior.eds import build_eds
from prolongation_kit.liealg.lie_element import LieElement, X
from prolongation_kit.prolong.determining import derive_determining_equations
from prolongation_kit.liealg.sl2 import structure_e
from prolongation_kit.prolong.extraction import declared_generators, extract, extract_open_algebra, reported_in_algebra
from prolongation_kit.prolong.solutions import OPAQUE_K, build_reduction, general_solution, verify_solution_form
from prolongation_kit.prolong.tower import build_ansatz, concrete_tower
from prolongation_kit.scalar.field_expr import FieldExpr
from prolongation_kit.scalar.jet import field
from prolongation_kit.scalar.params import ModelParams
from prolongation_kit.settings.constants import KChoice, Reduction

PARAMS = ModelParams(1)


@pytest.fixture(scope="module")
def equations():
    ansatz, _ = build_ansatz(PARAMS)
    return derive_determining_equations(ansatz, build_eds(PARAMS))


def _const(element: LieElement) -> FieldExpr:
    return FieldExpr.constant(element)


def test_general_solution_shape():
    tower = general_solution(PARAMS)
    assert tower.K == _const(X(4).commutator(X(5)))
    assert tower.h.constant_term() == X(4)
    assert tower.h.coefficient(((field(1), 1),)) == X(1)
    assert declared_generators(tower) == [1, 2, 3, 4, 5]


def test_generic_k_choice_uses_opaque_generator():
    tower = general_solution(PARAMS, KChoice.GENERIC)
    assert tower.K == _const(X(OPAQUE_K))


def test_reduction_tower_shape():
    tower = build_reduction(Reduction.I, PARAMS)
    assert tower.name == "reduction (i)"
    assert tower.h == FieldExpr.symbol(field(3), X(3)) + _const(X(4))
    assert tower.K == _const(X(12))
    assert declared_generators(tower) == [3, 4, 5]


def test_zero_tower_passes_trivially(equations):
    zero = FieldExpr()
    check = verify_solution_form(concrete_tower(PARAMS, zero, zero, zero), equations)
    assert check.passed
    assert check.relations == []


@pytest.mark.parametrize("which", list(Reduction))
def test_reductions_satisfy_the_solution_form(equations, which):
    check = verify_solution_form(build_reduction(which, PARAMS), equations)
    assert check.passed
    assert check.deferred


def test_general_solution_passes(equations):
    assert verify_solution_form(general_solution(PARAMS), equations).passed


def test_field_dependent_k_is_inconsistent():
    base = build_reduction(Reduction.I, PARAMS)
    f = base.f - _const(X(12)) + FieldExpr.symbol(field(1), X(12))
    tower = concrete_tower(PARAMS, base.h, f, base.g, name="bad K")
    with pytest.raises(InconsistentRelationError):
        extract(tower)


def test_reduction_extraction_names_frame_pairs():
    extraction = extract(build_reduction(Reduction.I, PARAMS))
    assert extraction.algebra.indices == [3, 4, 5, 10, 11, 12]
    assert extraction.named == {(3, 4): 10, (3, 5): 11, (4, 5): 12}
    assert extraction.algebra.table[(4, 5)] == X(12)


def test_general_extraction_yields_structure_table():
    algebra = extract_open_algebra(general_solution(PARAMS))
    assert algebra.indices == list(range(1, 13))
    for pair in ((1, 2), (1, 3), (2, 3)):
        assert algebra.table[pair].is_zero()
    assert algebra.table[(1, 4)] == X(6)
    assert algebra.table[(4, 5)] == X(12)


def test_constant_tower_names_single_bracket():
    tower = concrete_tower(PARAMS, _const(X(4)), _const(X(4).commutator(X(5))), _const(X(5)))
    algebra = extract_open_algebra(tower)
    assert algebra.indices == [4, 5, 12]
    assert algebra.table[(4, 5)] == X(12)


@pytest.mark.parametrize("gamma2", [1, -1])
def test_general_extraction_matches_structure_table_entrywise(gamma2):
    algebra = extract_open_algebra(general_solution(ModelParams(gamma2)))
    expected = structure_e()
    assert set(algebra.generators) == set(expected.generators)
    assert algebra.table == expected.table
    assert len(algebra.table) == 10


def test_reported_relations_rewritten_with_extracted_table():
    extraction = extract(general_solution(PARAMS))
    rewritten = reported_in_algebra(extraction)
    assert len(rewritten) <= len(extraction.reported)
    assert all(not value.is_zero() for value in rewritten)
    assert all(value == extraction.algebra.normalize(value) for value in rewritten)
