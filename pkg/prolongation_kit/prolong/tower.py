from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from prolongation_kit.exterior.diff_form import DiffForm, d
from prolongation_kit.scalar.field_expr import FieldExpr
from prolongation_kit.scalar.jet import coord, unknown, xi
from prolongation_kit.scalar.linalg import ScalarMatrix, as_matrix, identity, invert, is_zero_matrix, mat_sub
from prolongation_kit.scalar.params import ModelParams

DX, DY, DT = coord("x"), coord("y"), coord("t")


@dataclass(frozen=True)
class Tower:
    """Prolongation data (H, F, G, A, B, C); H, F, G carry one entry per pseudopotential."""

    params: ModelParams
    H: tuple[FieldExpr, ...]
    F: tuple[FieldExpr, ...]
    G: tuple[FieldExpr, ...]
    A: ScalarMatrix
    B: ScalarMatrix
    C: ScalarMatrix
    K: Optional[FieldExpr] = None
    Kbar: Optional[FieldExpr] = None
    name: str = "tower"
    notes: dict[str, str] = field(default_factory=dict, compare=False)

    def __post_init__(self) -> None:
        n = self.params.n
        for label, values in (("H", self.H), ("F", self.F), ("G", self.G)):
            if len(values) != n:
                raise ValueError(f"{label} needs {n} components, got {len(values)}")
        for label, matrix in (("A", self.A), ("B", self.B), ("C", self.C)):
            if len(matrix) != n:
                raise ValueError(f"{label} must be {n}x{n}")
        invert(self.C)

    @property
    def pseudopotential_dim(self) -> int:
        return self.params.n

    @property
    def h(self) -> FieldExpr:
        return self.H[0]

    @property
    def f(self) -> FieldExpr:
        return self.F[0]

    @property
    def g(self) -> FieldExpr:
        return self.G[0]

    def raw_omega_forms(self) -> list[DiffForm]:
        forms = []
        n = self.params.n
        for k in range(n):
            omega = (
                DiffForm.basis(DX, DY, coeff=self.H[k])
                + DiffForm.basis(DY, DT, coeff=self.F[k])
                + DiffForm.basis(DX, DT, coeff=self.G[k])
            )
            for m in range(n):
                frame = (
                    d(DX).scale(FieldExpr.constant(self.A[k][m]))
                    + d(DY).scale(FieldExpr.constant(self.B[k][m]))
                    + d(DT).scale(FieldExpr.constant(self.C[k][m]))
                )
                omega = omega + frame.wedge(d(xi(m + 1)))
            forms.append(omega)
        return forms

    def omega_forms(self) -> list[DiffForm]:
        """Ω multiplied by C⁻¹, so that dt∧dξ_m enters Ω_m alone and with coefficient 1."""
        raw = self.raw_omega_forms()
        if is_zero_matrix(mat_sub(self.C, identity(self.params.n))):
            return raw
        c_inv = invert(self.C)
        out = []
        for k in range(self.params.n):
            form = DiffForm.zero(2)
            for m, omega in enumerate(raw):
                form = form + omega.scale(FieldExpr.constant(c_inv[k][m]))
            out.append(form)
        return out


def _frame_matrix(value: Optional[Sequence[Sequence[int]]], n: int) -> ScalarMatrix:
    return identity(n) if value is None else as_matrix(value)


def build_ansatz(
    params: ModelParams,
    A: Optional[Sequence[Sequence]] = None,
    B: Optional[Sequence[Sequence]] = None,
    C: Optional[Sequence[Sequence]] = None,
) -> tuple[Tower, list[DiffForm]]:
    """Tower with undetermined H^k, F^k, G^k and its prolongation forms."""
    n = params.n
    tower = Tower(
        params=params,
        H=tuple(FieldExpr.symbol(unknown("H", k)) for k in range(1, n + 1)),
        F=tuple(FieldExpr.symbol(unknown("F", k)) for k in range(1, n + 1)),
        G=tuple(FieldExpr.symbol(unknown("G", k)) for k in range(1, n + 1)),
        A=_frame_matrix(A, n),
        B=_frame_matrix(B, n),
        C=_frame_matrix(C, n),
        name="ansatz",
    )
    return tower, tower.raw_omega_forms()


def concrete_tower(
    params: ModelParams,
    H: FieldExpr,
    F: FieldExpr,
    G: FieldExpr,
    A: Optional[Sequence[Sequence]] = None,
    B: Optional[Sequence[Sequence]] = None,
    K: Optional[FieldExpr] = None,
    Kbar: Optional[FieldExpr] = None,
    name: str = "tower",
) -> Tower:
    if params.n != 1:
        raise ValueError("Lie-valued towers are built for a single pseudopotential")
    return Tower(
        params=params,
        H=(H,),
        F=(F,),
        G=(G,),
        A=_frame_matrix(A, 1),
        B=_frame_matrix(B, 1),
        C=identity(1),
        K=K,
        Kbar=Kbar,
        name=name,
    )


def omega_from_connection(
    gamma1: FieldExpr, gamma2: FieldExpr, gamma3: FieldExpr, a: FieldExpr, b: FieldExpr, c: FieldExpr
) -> DiffForm:
    """(A dx + B dy + C dt) ∧ (dξ − Γ1 dx − Γ2 dy − Γ3 dt) for one pseudopotential.

    Matrix coefficients read H = BΓ1 − AΓ2, F = CΓ2 − BΓ3, G = CΓ1 − AΓ3.
    """
    connection = d(DX).scale(gamma1) + d(DY).scale(gamma2) + d(DT).scale(gamma3) - d(xi(1))
    frame = d(DX).scale(a) + d(DY).scale(b) + d(DT).scale(c)
    return -frame.wedge(connection)
