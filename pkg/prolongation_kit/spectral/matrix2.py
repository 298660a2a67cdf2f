from __future__ import annotations

from fractions import Fraction
from typing import Union
try:
    from typing import override
except ImportError:
    from typing_extensions import override

import numpy as np
import sympy

from prolongation_kit.contracts.coefficient import Coefficient
from prolongation_kit.errors.exceptions import SingularMatrixError
from prolongation_kit.scalar.exact_scalar import I_UNIT, LAMBDA_SYMBOL, ONE, ZERO, ExactScalar

Entry = Union[ExactScalar, int, Fraction]
HALF = ExactScalar.of(Fraction(1, 2))


class Matrix2(Coefficient):
    """2×2 matrix over ExactScalar, stored row-major."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a: Entry = 0, b: Entry = 0, c: Entry = 0, d: Entry = 0) -> None:
        self.a = ExactScalar.of(a)
        self.b = ExactScalar.of(b)
        self.c = ExactScalar.of(c)
        self.d = ExactScalar.of(d)

    @classmethod
    def scalar(cls, value: Entry) -> "Matrix2":
        return cls(value, 0, 0, value)

    @property
    def entries(self) -> tuple[ExactScalar, ExactScalar, ExactScalar, ExactScalar]:
        return (self.a, self.b, self.c, self.d)

    @override
    def __add__(self, other: "Matrix2") -> "Matrix2":
        return Matrix2(*(x + y for x, y in zip(self.entries, other.entries)))

    @override
    def __neg__(self) -> "Matrix2":
        return Matrix2(*(-x for x in self.entries))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, ExactScalar)):
            return self.scale(ExactScalar.of(other))
        if not isinstance(other, Matrix2):
            return NotImplemented
        return self.multiply(other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, ExactScalar)):
            return self.scale(ExactScalar.of(other))
        return NotImplemented

    @override
    def scale(self, factor: ExactScalar) -> "Matrix2":
        return Matrix2(*(x * factor for x in self.entries))

    @override
    def multiply(self, other: "Matrix2") -> "Matrix2":
        return Matrix2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    @override
    def commutator(self, other: "Matrix2") -> "Matrix2":
        return self.multiply(other) - other.multiply(self)

    @override
    def is_zero(self) -> bool:
        return all(x.is_zero() for x in self.entries)

    @override
    def zero_like(self) -> "Matrix2":
        return ZERO2

    def trace(self) -> ExactScalar:
        return self.a + self.d

    def det(self) -> ExactScalar:
        return self.a * self.d - self.b * self.c

    def inverse(self) -> "Matrix2":
        det = self.det()
        if not det.is_monomial():
            raise SingularMatrixError(f"det = {det} is not invertible")
        inv = det.inverse()
        return Matrix2(self.d * inv, -self.b * inv, -self.c * inv, self.a * inv)

    def pauli_components(self) -> tuple[ExactScalar, ExactScalar, ExactScalar, ExactScalar]:
        """Coefficients on (I, σ1, σ2, σ3)."""
        return (
            (self.a + self.d) * HALF,
            (self.b + self.c) * HALF,
            (self.b - self.c) * I_UNIT * HALF,
            (self.a - self.d) * HALF,
        )

    def evaluate(self, lam: complex = 1.0) -> np.ndarray:
        return np.array([[self.a.evaluate(lam), self.b.evaluate(lam)], [self.c.evaluate(lam), self.d.evaluate(lam)]])

    def to_sympy(self, lam: sympy.Symbol = LAMBDA_SYMBOL) -> sympy.Matrix:
        return sympy.Matrix([[self.a.to_sympy(lam), self.b.to_sympy(lam)], [self.c.to_sympy(lam), self.d.to_sympy(lam)]])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix2):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __str__(self) -> str:
        return f"[{self.a}, {self.b}; {self.c}, {self.d}]"

    def __repr__(self) -> str:
        return f"Matrix2({self})"


ZERO2 = Matrix2()
IDENTITY2 = Matrix2(ONE, ZERO, ZERO, ONE)
SIGMA1 = Matrix2(0, 1, 1, 0)
SIGMA2 = Matrix2(0, -I_UNIT, I_UNIT, 0)
SIGMA3 = Matrix2(1, 0, 0, -1)
PAULI = (SIGMA1, SIGMA2, SIGMA3)
