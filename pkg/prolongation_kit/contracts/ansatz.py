from __future__ import annotations

from typing import TYPE_CHECKING, Protocol, runtime_checkable

if TYPE_CHECKING:
    from prolongation_kit.exterior.diff_form import DiffForm


@runtime_checkable
class OmegaSource(Protocol):
    """Anything that can hand out its prolongation forms, normalized so dt∧dxi_m has coefficient 1."""

    pseudopotential_dim: int

    def omega_forms(self) -> list["DiffForm"]: ...
