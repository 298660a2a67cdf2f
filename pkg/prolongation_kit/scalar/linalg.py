from __future__ import annotations

from typing import Sequence

from prolongation_kit.errors.exceptions import SingularMatrixError
from prolongation_kit.scalar.exact_scalar import ONE, ZERO, ExactScalar

ScalarMatrix = tuple[tuple[ExactScalar, ...], ...]


def as_matrix(rows: Sequence[Sequence[ExactScalar | int]]) -> ScalarMatrix:
    matrix = tuple(tuple(ExactScalar.of(v) for v in row) for row in rows)
    if any(len(row) != len(matrix) for row in matrix):
        raise ValueError("Matrix must be square")
    return matrix


def identity(n: int) -> ScalarMatrix:
    return tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n))


def scalar_matrix(value: ExactScalar | int, n: int) -> ScalarMatrix:
    value = ExactScalar.of(value)
    return tuple(tuple(value if i == j else ZERO for j in range(n)) for i in range(n))


def mat_mul(a: ScalarMatrix, b: ScalarMatrix) -> ScalarMatrix:
    n = len(a)
    return tuple(
        tuple(sum((a[i][k] * b[k][j] for k in range(n)), ZERO) for j in range(n)) for i in range(n)
    )


def mat_sub(a: ScalarMatrix, b: ScalarMatrix) -> ScalarMatrix:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def commutator(a: ScalarMatrix, b: ScalarMatrix) -> ScalarMatrix:
    return mat_sub(mat_mul(a, b), mat_mul(b, a))


def is_zero_matrix(a: ScalarMatrix) -> bool:
    return all(v.is_zero() for row in a for v in row)


def scalar_value(a: ScalarMatrix) -> ExactScalar | None:
    """The common diagonal value when ``a`` is a multiple of the identity."""
    n = len(a)
    if any(not a[i][j].is_zero() for i in range(n) for j in range(n) if i != j):
        return None
    if any(a[i][i] != a[0][0] for i in range(n)):
        return None
    return a[0][0]


def invert(a: ScalarMatrix) -> ScalarMatrix:
    """Gauss-Jordan over Laurent polynomials; every pivot must be a single-term scalar."""
    n = len(a)
    work = [list(row) + list(irow) for row, irow in zip(a, identity(n))]
    for col in range(n):
        pivot = next((r for r in range(col, n) if work[r][col].is_monomial()), None)
        if pivot is None:
            raise SingularMatrixError(f"No invertible pivot in column {col + 1}")
        work[col], work[pivot] = work[pivot], work[col]
        inv = work[col][col].inverse()
        work[col] = [v * inv for v in work[col]]
        for r in range(n):
            if r != col and not work[r][col].is_zero():
                factor = work[r][col]
                work[r] = [v - factor * p for v, p in zip(work[r], work[col])]
    return tuple(tuple(row[n:]) for row in work)


def format_matrix(a: ScalarMatrix) -> str:
    return "[" + "; ".join(", ".join(str(v) for v in row) for row in a) + "]"
