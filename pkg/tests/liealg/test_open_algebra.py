import pytest

from prolongation_kit.liealg.lie_element import LieElement, X, bracket
from prolongation_kit.liealg.open_algebra import OpenAlgebra
from prolongation_kit.scalar.exact_scalar import LAMBDA


def test_free_bracket_is_antisymmetric():
    assert bracket(X(1), X(2)) == -bracket(X(2), X(1))
    assert bracket(X(1), X(1)).is_zero()
    assert str(bracket(X(2), X(1))) == "-[X1,X2]"


def test_lie_element_formatting():
    element = X(3, LAMBDA * 2) - X(1)
    assert str(element) == "-X1 + 2*lambda*X3"
    assert element.generators() == {1, 3}
    assert element.is_linear()


def test_table_lookup_uses_orientation():
    algebra = OpenAlgebra()
    algebra.define_bracket(2, 1, X(3))
    assert algebra.table[(1, 2)] == -X(3)
    assert algebra.bracket(X(2), X(1)) == X(3)
    assert algebra.indices == [1, 2, 3]


def test_self_bracket_definition_rejected():
    with pytest.raises(ValueError):
        OpenAlgebra(table={(4, 4): X(1)})


def test_unknown_pairs_stay_formal():
    algebra = OpenAlgebra.declared([1, 2, 3])
    algebra.define_bracket(1, 2, X(3))
    assert algebra.unknown_pairs() == [(1, 3), (2, 3)]
    assert algebra.normalize(X(1).commutator(X(3))) == LieElement.word(1, 3)


def test_linear_relation_eliminates_largest_generator():
    algebra = OpenAlgebra(table={(1, 2): X(3)})
    text = algebra.add_relation(X(1) - X(2))
    assert text == "X2 = X1"
    assert algebra.normalize(X(2)) == X(1)
    assert algebra.relations_hold()


def test_implied_relation_returns_none():
    algebra = OpenAlgebra(table={(1, 2): X(3)})
    assert algebra.add_relation(X(1).commutator(X(2)) - X(3)) is None


def test_word_relation_becomes_table_entry():
    algebra = OpenAlgebra.declared([1, 2, 3])
    algebra.add_relation(X(1).commutator(X(3)) - X(2))
    assert algebra.table[(1, 3)] == X(2)
    assert algebra.dump() == "[X1,X3] = X2"


def test_copy_is_independent():
    algebra = OpenAlgebra(table={(1, 2): X(3)})
    clone = algebra.copy()
    clone.define_bracket(1, 3, X(2))
    assert (1, 3) not in algebra.table
    assert clone != algebra
