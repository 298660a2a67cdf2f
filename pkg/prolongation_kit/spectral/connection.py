from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional

from prolongation_kit.scalar.exact_scalar import ONE, ExactScalar
from prolongation_kit.scalar.field_expr import FieldExpr
from prolongation_kit.spectral.matrix2 import IDENTITY2, Matrix2

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ConnectionComponents:
    """Connection Γ_k = gamma_k / denominator; Γ3 is free up to ``kernel``·Y when a kernel is present."""

    gamma1: FieldExpr
    gamma2: FieldExpr
    gamma3: FieldExpr
    A: Matrix2
    B: Matrix2
    kernel: Optional[Matrix2] = None
    denominator: ExactScalar = ONE

    @property
    def gauge_free(self) -> bool:
        return self.kernel is not None


@dataclass(frozen=True)
class ConnectionResult:
    components: Optional[ConnectionComponents]
    obstruction: FieldExpr

    @property
    def feasible(self) -> bool:
        return self.components is not None


@dataclass(frozen=True)
class _LinearSolve:
    """M·X = R solved as X = particular·R / denominator when cokernel·R vanishes."""

    particular: Matrix2
    denominator: ExactScalar
    kernel: Optional[Matrix2]
    cokernel: Optional[Matrix2]


def _left(matrix: Matrix2, expr: FieldExpr) -> FieldExpr:
    return FieldExpr.constant(matrix) * expr


def _rows(m: Matrix2) -> tuple[tuple[ExactScalar, ExactScalar], tuple[ExactScalar, ExactScalar]]:
    return (m.a, m.b), (m.c, m.d)


def _pivot(m: Matrix2) -> tuple[int, int]:
    """First nonzero entry, preferring one that is invertible as a Laurent monomial."""
    cells = [(p, q) for p in range(2) for q in range(2) if not _rows(m)[p][q].is_zero()]
    monomial = [(p, q) for p, q in cells if _rows(m)[p][q].is_monomial()]
    return (monomial or cells)[0]


def _solver(m: Matrix2) -> _LinearSolve:
    if m.is_zero():
        return _LinearSolve(Matrix2(), ONE, IDENTITY2, IDENTITY2)
    det = m.det()
    if not det.is_zero():
        if det.is_monomial():
            return _LinearSolve(m.inverse(), ONE, None, None)
        return _LinearSolve(Matrix2(m.d, -m.b, -m.c, m.a), det, None, None)

    rows = _rows(m)
    p, q = _pivot(m)
    pivot = rows[p][q]
    weight = pivot.inverse() if pivot.is_monomial() else ONE
    cells = [ExactScalar(), ExactScalar(), ExactScalar(), ExactScalar()]
    cells[2 * q + p] = weight
    particular = Matrix2(*cells)
    denominator = ONE if pivot.is_monomial() else pivot

    row = rows[p]
    kernel = Matrix2(-row[1], 0, row[0], 0)
    column = (rows[0][q], rows[1][q])
    cokernel = Matrix2(-column[1], column[0], 0, 0)
    return _LinearSolve(particular, denominator, kernel, cokernel)


def solve_connection(
    Hm: FieldExpr,
    Fm: FieldExpr,
    Gm: FieldExpr,
    A: Matrix2,
    B: Matrix2,
    C: Matrix2 = IDENTITY2,
    gauge: Optional[FieldExpr] = None,
) -> ConnectionResult:
    """Solve H = BΓ1 − AΓ2, F = Γ2 − BΓ3, G = Γ1 − AΓ3 for the connection Γ.

    Eliminating Γ1 and Γ2 leaves [B,A]Γ3 = H − BG + AF. A singular [B,A] is solvable
    exactly when the cokernel annihilates the right-hand side; that projection is the
    obstruction otherwise.
    """
    if C != IDENTITY2:
        raise ValueError("solve_connection expects C = identity")
    rest = Hm - _left(B, Gm) + _left(A, Fm)
    solve = _solver(B.commutator(A))
    if solve.cokernel is not None:
        obstruction = _left(solve.cokernel, rest)
        if not obstruction.is_zero():
            logger.info("Conexión no resoluble; obstrucción %s", obstruction)
            return ConnectionResult(None, obstruction)
    d = solve.denominator
    gamma3 = _left(solve.particular, rest)
    if solve.kernel is not None and gauge is not None:
        gamma3 = gamma3 + _left(solve.kernel, gauge) * d
    elif gauge is not None:
        logger.warning("[B,A] invertible; se ignora el gauge")
    components = ConnectionComponents(
        gamma1=Gm * d + _left(A, gamma3),
        gamma2=Fm * d + _left(B, gamma3),
        gamma3=gamma3,
        A=A,
        B=B,
        kernel=solve.kernel,
        denominator=d,
    )
    return ConnectionResult(components, FieldExpr())


def connection_residuals(c: ConnectionComponents, Hm: FieldExpr, Fm: FieldExpr, Gm: FieldExpr) -> dict[str, FieldExpr]:
    """The three defining relations, cleared of the common denominator."""
    d = c.denominator
    return {
        "H": Hm * d - (_left(c.B, c.gamma1) - _left(c.A, c.gamma2)),
        "F": Fm * d - (c.gamma2 - _left(c.B, c.gamma3)),
        "G": Gm * d - (c.gamma1 - _left(c.A, c.gamma3)),
    }
