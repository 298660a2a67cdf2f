from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from prolongation_kit.errors.exceptions import JetOrderError

COORDINATES = ("x", "y", "t")
UNKNOWN_BASES = ("H", "F", "G")

_KIND_RANK = {"coord": 0, "field": 1, "xi": 2, "unknown": 3, "total": 4}


@dataclass(frozen=True)
class JetSymbol:
    """A jet coordinate, a pseudopotential, an unknown function or a marked total derivative."""

    kind: str
    base: str
    index: int = 0
    derivs: str = ""
    wrt: Optional["JetSymbol"] = None

    @property
    def name(self) -> str:
        if self.kind == "coord":
            return self.base
        if self.kind == "field":
            return f"S{self.index}_{self.derivs}" if self.derivs else f"S{self.index}"
        if self.kind == "xi":
            return f"xi{self.index}"
        if self.kind == "unknown":
            head = f"{self.base}{self.index}"
            return f"{head}_{{{self.wrt.name}}}" if self.wrt is not None else head
        return f"D_{self.derivs}({self.wrt.name})"

    @property
    def order(self) -> int:
        return len(self.derivs) if self.kind == "field" else 0

    def sort_key(self) -> tuple:
        wrt_key = self.wrt.sort_key() if self.wrt is not None else ()
        return (_KIND_RANK[self.kind], self.base, self.index, len(self.derivs), self.derivs, wrt_key)

    def __lt__(self, other: "JetSymbol") -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        return self.name

    def __repr__(self) -> str:
        return f"JetSymbol({self.name})"


def coord(name: str) -> JetSymbol:
    if name not in COORDINATES:
        raise ValueError(f"Unknown coordinate {name!r}")
    return JetSymbol("coord", name)


def field(index: int, derivs: str = "") -> JetSymbol:
    if not 1 <= index <= 3:
        raise ValueError(f"Spin component must be 1..3, got {index}")
    if len(derivs) > 2 or any(d not in COORDINATES for d in derivs):
        raise JetOrderError(f"S{index}_{derivs}")
    canonical = "".join(sorted(derivs, key=COORDINATES.index))
    return JetSymbol("field", "S", index, canonical)


def xi(index: int) -> JetSymbol:
    if index < 1:
        raise ValueError(f"Pseudopotential index must be >= 1, got {index}")
    return JetSymbol("xi", "xi", index)


def unknown(base: str, index: int, wrt: JetSymbol | None = None) -> JetSymbol:
    if base not in UNKNOWN_BASES:
        raise ValueError(f"Unknown function base must be one of {UNKNOWN_BASES}, got {base!r}")
    return JetSymbol("unknown", base, index, wrt=wrt)


def total(direction: str, symbol: JetSymbol) -> JetSymbol:
    if direction not in COORDINATES:
        raise ValueError(f"Unknown direction {direction!r}")
    return JetSymbol("total", "D", 0, direction, wrt=symbol)


def spin(derivs: str = "") -> tuple[JetSymbol, JetSymbol, JetSymbol]:
    return field(1, derivs), field(2, derivs), field(3, derivs)


def prolong_symbol(symbol: JetSymbol, direction: str) -> JetSymbol:
    """Field symbol one derivative deeper; deeper than second order is rejected."""
    if symbol.kind != "field":
        raise JetOrderError(symbol.name)
    if symbol.order >= 2:
        raise JetOrderError(f"{symbol.name} in {direction}")
    return field(symbol.index, symbol.derivs + direction)
