import random
from fractions import Fraction

import pytest
import sympy

from prolongation_kit.cli.dsl import parse_scalar
from prolongation_kit.errors.exceptions import SingularMatrixError
from prolongation_kit.scalar.exact_scalar import I_UNIT, LAMBDA, LAMBDA_SYMBOL, ONE, ZERO, ExactScalar


def test_gaussian_arithmetic_is_exact():
    a = ExactScalar.gaussian(Fraction(1, 3), 2)
    b = ExactScalar.gaussian(3, -1)
    assert a * b == ExactScalar.gaussian(Fraction(1) + 2, Fraction(-1, 3) + 6)
    assert I_UNIT * I_UNIT == -1


def test_zero_terms_are_dropped():
    assert (LAMBDA - LAMBDA).is_zero()
    assert LAMBDA - LAMBDA == ZERO
    assert not ZERO


def test_laurent_powers_and_inverse():
    s = ExactScalar.gaussian(0, 2, power=3)
    assert s * s.inverse() == ONE
    assert LAMBDA**-2 == ExactScalar.gaussian(1, 0, power=-2)


def test_inverse_of_binomial_is_singular():
    with pytest.raises(SingularMatrixError):
        (ONE + LAMBDA).inverse()


def test_str_formats_terms_in_exponent_order():
    value = LAMBDA * 2 * I_UNIT - 1 + ExactScalar.gaussian(Fraction(1, 2), 0, power=-1)
    assert str(value) == "1/2*lambda^-1 - 1 + 2*i*lambda"
    assert str(ZERO) == "0"


def test_parse_matches_str():
    value = ExactScalar.gaussian(1, -2, power=2) + Fraction(3, 4)
    assert ExactScalar.parse(str(value)) == value


def test_evaluate_and_sympy_agree():
    value = I_UNIT * 2 * LAMBDA**3 - Fraction(1, 2)
    assert value.evaluate(0.5) == pytest.approx(2j * 0.125 - 0.5)
    assert sympy.simplify(value.to_sympy() - (2 * sympy.I * LAMBDA_SYMBOL**3 - sympy.Rational(1, 2))) == 0


def test_hash_and_eq_with_ints():
    assert ExactScalar.of(2) == 2
    assert hash(ExactScalar.of(2)) == hash(ONE + ONE)
    assert len({ONE, ExactScalar.gaussian(1, 0)}) == 1


def _random_scalar(rng):
    total = ZERO
    for _ in range(rng.randint(1, 3)):
        re = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
        im = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
        total = total + ExactScalar.gaussian(re, im, power=rng.randint(-2, 2))
    return total


def test_ring_laws_on_random_scalars():
    rng = random.Random(20240611)
    for _ in range(50):
        a, b, c = (_random_scalar(rng) for _ in range(3))
        assert a * (b + c) == a * b + a * c
        assert (a * b) * c == a * (b * c)
        assert a - a == ZERO


def test_printed_form_parses_back_on_random_scalars():
    rng = random.Random(7)
    for _ in range(50):
        value = _random_scalar(rng)
        assert parse_scalar(str(value)) == value


def test_conjugate_flips_imaginary_parts_only():
    s = ExactScalar.gaussian(1, 2, power=-1) + ExactScalar.gaussian(0, -3, power=2)

    assert s.conjugate() == ExactScalar.gaussian(1, -2, power=-1) + ExactScalar.gaussian(0, 3, power=2)
    assert s.conjugate().conjugate() == s
