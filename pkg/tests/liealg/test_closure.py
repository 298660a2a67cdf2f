import pytest

from prolongation_kit.errors.exceptions import ClosingInconsistencyError
from prolongation_kit.liealg.closure import (
    apply_closing_map,
    jacobi_closure,
    jacobi_combination,
    jacobi_defects,
    substitute_generators,
)
from prolongation_kit.liealg.lie_element import LieElement, X
from prolongation_kit.liealg.open_algebra import OpenAlgebra
from prolongation_kit.liealg.sl2 import reduction_algebra, structure_e
from prolongation_kit.settings.constants import Reduction


def _so3() -> OpenAlgebra:
    return OpenAlgebra(table={(1, 2): X(3), (2, 3): X(1), (1, 3): -X(2)})


def test_jacobi_holds_in_so3():
    algebra = _so3()
    assert jacobi_combination(algebra, 1, 2, 3).is_zero()
    assert jacobi_defects(algebra) == []


def test_jacobi_defect_reported():
    algebra = OpenAlgebra(table={(1, 2): X(3), (1, 3): LieElement(), (2, 3): X(2)})
    ((triple, value),) = jacobi_defects(algebra)
    assert triple == (1, 2, 3)
    assert value == X(3)


def test_closure_counts_grow_on_structure_algebra():
    _, report = jacobi_closure(structure_e(), 3)
    counts = report.generator_counts
    assert len(counts) == 3
    assert counts[0] > 12
    assert all(a < b for a, b in zip(counts, counts[1:]))
    assert not report.reached_fixpoint


def test_closure_of_closed_algebra_is_fixpoint():
    closed, report = jacobi_closure(_so3(), 2)
    assert report.generator_counts == [3, 3]
    assert report.reached_fixpoint
    assert closed == _so3()


def test_closure_depth_must_be_positive():
    with pytest.raises(ValueError):
        jacobi_closure(_so3(), 0)


def test_substitute_generators_inside_words():
    closing = {3: X(1, 2)}
    element = X(3) + LieElement.word(2, 3)
    assert substitute_generators(element, closing) == X(1, 2) + LieElement.word(2, 1, 2)


def test_closing_map_forcing_linear_relation_raises():
    algebra = OpenAlgebra(table={(1, 2): X(1)})
    with pytest.raises(ClosingInconsistencyError) as exc:
        apply_closing_map(algebra, {2: LieElement()})
    assert exc.value.pair == (1, 2)


def test_closing_image_must_use_survivors():
    algebra = OpenAlgebra(table={(1, 2): X(3)})
    with pytest.raises(ValueError):
        apply_closing_map(algebra, {3: X(3)})


def test_depth_one_closure_of_first_reduction():
    _, report = jacobi_closure(reduction_algebra(Reduction.I), 1)
    assert report.passes[0].new_relations == ["[X3,X12] = [X4,X11] - [X5,X10]"]
    assert report.generator_counts[0] > 6
