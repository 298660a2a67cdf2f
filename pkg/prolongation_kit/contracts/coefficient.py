from __future__ import annotations

from abc import ABC, abstractmethod
from typing import TYPE_CHECKING, TypeVar

if TYPE_CHECKING:
    from prolongation_kit.scalar.exact_scalar import ExactScalar

C = TypeVar("C", bound="Coefficient")


class Coefficient(ABC):
    """Contract for the coefficient algebras a FieldExpr can carry."""

    @abstractmethod
    def __add__(self: C, other: C) -> C: ...

    @abstractmethod
    def __neg__(self: C) -> C: ...

    @abstractmethod
    def scale(self: C, factor: "ExactScalar") -> C: ...

    @abstractmethod
    def is_zero(self) -> bool: ...

    @abstractmethod
    def zero_like(self: C) -> C: ...

    def __sub__(self: C, other: C) -> C:
        return self + (-other)

    def multiply(self: C, other: C) -> C:
        raise TypeError(f"{type(self).__name__} coefficients cannot be multiplied together")

    def commutator(self: C, other: C) -> C:
        raise TypeError(f"{type(self).__name__} coefficients have no commutator")
