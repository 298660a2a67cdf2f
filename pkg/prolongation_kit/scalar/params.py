from __future__ import annotations

from dataclasses import dataclass

from prolongation_kit.scalar.exact_scalar import ExactScalar
from prolongation_kit.settings.parsers import parse_gamma2


@dataclass(frozen=True)
class ModelParams:
    gamma2: int = 1
    n: int = 1

    def __post_init__(self) -> None:
        object.__setattr__(self, "gamma2", parse_gamma2(self.gamma2))
        if self.n < 1:
            raise ValueError(f"Pseudopotential dimension must be >= 1, got {self.n}")

    @property
    def gamma2_scalar(self) -> ExactScalar:
        return ExactScalar.of(self.gamma2)

    @property
    def weights(self) -> tuple[int, int, int]:
        """Diagonal of Gamma; it is its own inverse."""
        return (1, 1, self.gamma2)

    @property
    def compact(self) -> bool:
        return self.gamma2 == 1
