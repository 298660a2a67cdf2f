from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterator, Mapping, Optional, Union
try:
    from typing import override
except ImportError:
    from typing_extensions import override

from prolongation_kit.contracts.coefficient import Coefficient
from prolongation_kit.scalar.exact_scalar import ONE, ExactScalar

Term = Union[int, tuple["Term", "Term"]]


def term_key(term: Term) -> tuple:
    if isinstance(term, int):
        return (0, term)
    return (1, term_key(term[0]), term_key(term[1]))


def term_str(term: Term) -> str:
    if isinstance(term, int):
        return f"X{term}"
    return f"[{term_str(term[0])},{term_str(term[1])}]"


def term_generators(term: Term) -> set[int]:
    if isinstance(term, int):
        return {term}
    return term_generators(term[0]) | term_generators(term[1])


def _coeff_prefix(coeff: ExactScalar) -> str:
    text = str(coeff)
    if text == "1":
        return ""
    if text == "-1":
        return "-"
    if " " in text:
        return f"({text})*"
    return f"{text}*"


class LieElement(Coefficient):
    """Finite ExactScalar combination of generators and formal bracket words."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Mapping[Term, ExactScalar]] = None) -> None:
        cleaned = {t: c for t, c in (terms or {}).items() if not c.is_zero()}
        self._terms = {t: cleaned[t] for t in sorted(cleaned, key=term_key)}
        self._hash = hash(tuple(self._terms.items()))

    @classmethod
    def gen(cls, index: int, coeff: ExactScalar | int | Fraction = 1) -> "LieElement":
        if index < 1:
            raise ValueError(f"Generator indices are positive, got {index}")
        return cls({index: ExactScalar.of(coeff)})

    @classmethod
    def word(cls, left: Term, right: Term, coeff: ExactScalar | int = 1) -> "LieElement":
        return cls({left: ONE}).commutator(cls({right: ONE})).scale(ExactScalar.of(coeff))

    @classmethod
    def zero(cls) -> "LieElement":
        return cls()

    def items(self) -> Iterator[tuple[Term, ExactScalar]]:
        return iter(self._terms.items())

    def coefficient(self, term: Term) -> ExactScalar:
        return self._terms.get(term, ExactScalar())

    def __len__(self) -> int:
        return len(self._terms)

    @override
    def __add__(self, other: "LieElement") -> "LieElement":
        out = dict(self._terms)
        for term, coeff in other._terms.items():
            out[term] = out[term] + coeff if term in out else coeff
        return LieElement(out)

    @override
    def __neg__(self) -> "LieElement":
        return LieElement({t: -c for t, c in self._terms.items()})

    @override
    def scale(self, factor: ExactScalar) -> "LieElement":
        factor = ExactScalar.of(factor)
        return LieElement({t: c * factor for t, c in self._terms.items()})

    @override
    def is_zero(self) -> bool:
        return not self._terms

    @override
    def zero_like(self) -> "LieElement":
        return LieElement()

    @override
    def commutator(self, other: "LieElement") -> "LieElement":
        """Free antisymmetric bracket, without any table."""
        out: dict[Term, ExactScalar] = {}
        for t1, c1 in self._terms.items():
            for t2, c2 in other._terms.items():
                if t1 == t2:
                    continue
                if term_key(t1) < term_key(t2):
                    word, coeff = (t1, t2), c1 * c2
                else:
                    word, coeff = (t2, t1), -(c1 * c2)
                out[word] = out[word] + coeff if word in out else coeff
        return LieElement(out)

    def map_terms(self, fn: Callable[[Term], "LieElement"]) -> "LieElement":
        result = LieElement()
        for term, coeff in self._terms.items():
            result = result + fn(term).scale(coeff)
        return result

    def is_linear(self) -> bool:
        return all(isinstance(t, int) for t in self._terms)

    def generators(self) -> set[int]:
        out: set[int] = set()
        for term in self._terms:
            out |= term_generators(term)
        return out

    def evaluate(self, lam: complex = 1.0):
        raise TypeError("Lie-valued expressions need a representation before numeric evaluation")

    def to_sympy(self, lam=None):
        raise TypeError("Lie-valued expressions need a representation before symbolic export")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LieElement):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return self._hash

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for term, coeff in self._terms.items():
            text = f"{_coeff_prefix(coeff)}{term_str(term)}"
            if not parts:
                parts.append(text)
            elif text.startswith("-"):
                parts.append(f"- {text[1:]}")
            else:
                parts.append(f"+ {text}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"LieElement({self})"


def X(index: int, coeff: ExactScalar | int | Fraction = 1) -> LieElement:
    return LieElement.gen(index, coeff)


def bracket(a: LieElement, b: LieElement) -> LieElement:
    return a.commutator(b)
