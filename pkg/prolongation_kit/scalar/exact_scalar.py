from __future__ import annotations

from fractions import Fraction
from typing import Iterator, Mapping, Union
try:
    from typing import override
except ImportError:
    from typing_extensions import override

import sympy

from prolongation_kit.contracts.coefficient import Coefficient
from prolongation_kit.errors.exceptions import SingularMatrixError

Gaussian = tuple[Fraction, Fraction]
ScalarLike = Union["ExactScalar", int, Fraction]

LAMBDA_SYMBOL = sympy.Symbol("lambda")


def _gauss_mul(a: Gaussian, b: Gaussian) -> Gaussian:
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def _fmt_fraction(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _fmt_gauss(re: Fraction, im: Fraction) -> str:
    if im == 0:
        return _fmt_fraction(re)
    imag = "i" if abs(im) == 1 else f"{_fmt_fraction(abs(im))}*i"
    if re == 0:
        return imag if im > 0 else f"-{imag}"
    sign = "+" if im > 0 else "-"
    return f"({_fmt_fraction(re)}{sign}{imag})"


class ExactScalar(Coefficient):
    """Laurent polynomial in lambda with Gaussian-rational coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, Gaussian] | None = None) -> None:
        cleaned: dict[int, Gaussian] = {}
        for exp, (re, im) in sorted((terms or {}).items()):
            re, im = Fraction(re), Fraction(im)
            if re != 0 or im != 0:
                cleaned[int(exp)] = (re, im)
        self._terms = cleaned
        self._hash = hash(tuple(cleaned.items()))

    @classmethod
    def of(cls, value: ScalarLike) -> "ExactScalar":
        if isinstance(value, ExactScalar):
            return value
        if isinstance(value, (int, Fraction)):
            return cls({0: (Fraction(value), Fraction(0))})
        raise TypeError(f"Cannot build an ExactScalar from {type(value).__name__}")

    @classmethod
    def gaussian(cls, re: int | Fraction, im: int | Fraction = 0, power: int = 0) -> "ExactScalar":
        return cls({power: (Fraction(re), Fraction(im))})

    @classmethod
    def parse(cls, text: str) -> "ExactScalar":
        from prolongation_kit.cli.dsl import parse_scalar

        return parse_scalar(text)

    @property
    def terms(self) -> dict[int, Gaussian]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[int, Gaussian]]:
        return iter(self._terms.items())

    @override
    def __add__(self, other: ScalarLike) -> "ExactScalar":
        other = ExactScalar.of(other)
        out = dict(self._terms)
        for exp, (re, im) in other._terms.items():
            cur = out.get(exp, (Fraction(0), Fraction(0)))
            out[exp] = (cur[0] + re, cur[1] + im)
        return ExactScalar(out)

    __radd__ = __add__

    @override
    def __neg__(self) -> "ExactScalar":
        return ExactScalar({e: (-re, -im) for e, (re, im) in self._terms.items()})

    def __sub__(self, other: ScalarLike) -> "ExactScalar":
        return self + (-ExactScalar.of(other))

    def __rsub__(self, other: ScalarLike) -> "ExactScalar":
        return ExactScalar.of(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = ExactScalar.of(other)
        if not isinstance(other, ExactScalar):
            if isinstance(other, Coefficient):
                return other.scale(self)
            return NotImplemented
        out: dict[int, Gaussian] = {}
        for e1, g1 in self._terms.items():
            for e2, g2 in other._terms.items():
                prod = _gauss_mul(g1, g2)
                cur = out.get(e1 + e2, (Fraction(0), Fraction(0)))
                out[e1 + e2] = (cur[0] + prod[0], cur[1] + prod[1])
        return ExactScalar(out)

    def __rmul__(self, other: ScalarLike) -> "ExactScalar":
        return ExactScalar.of(other) * self

    def __truediv__(self, other: ScalarLike) -> "ExactScalar":
        return self * ExactScalar.of(other).inverse()

    def __pow__(self, power: int) -> "ExactScalar":
        if power < 0:
            return self.inverse() ** (-power)
        result = ONE
        for _ in range(power):
            result = result * self
        return result

    @override
    def scale(self, factor: "ExactScalar") -> "ExactScalar":
        return self * factor

    @override
    def multiply(self, other: "ExactScalar") -> "ExactScalar":
        return self * other

    @override
    def commutator(self, other: "ExactScalar") -> "ExactScalar":
        return ZERO

    @override
    def is_zero(self) -> bool:
        return not self._terms

    @override
    def zero_like(self) -> "ExactScalar":
        return ZERO

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def inverse(self) -> "ExactScalar":
        if not self.is_monomial():
            raise SingularMatrixError(f"{self} has no inverse among Laurent polynomials")
        ((exp, (re, im)),) = self._terms.items()
        norm = re * re + im * im
        return ExactScalar({-exp: (re / norm, -im / norm)})

    def conjugate(self) -> "ExactScalar":
        return ExactScalar({e: (re, -im) for e, (re, im) in self._terms.items()})

    def evaluate(self, lam: complex = 1.0) -> complex:
        total = 0j
        for exp, (re, im) in self._terms.items():
            total += complex(float(re), float(im)) * lam**exp
        return total

    def to_sympy(self, lam: sympy.Symbol = LAMBDA_SYMBOL) -> sympy.Expr:
        return sympy.Add(
            *[
                (sympy.Rational(re.numerator, re.denominator) + sympy.I * sympy.Rational(im.numerator, im.denominator))
                * lam**exp
                for exp, (re, im) in self._terms.items()
            ]
        )

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = ExactScalar.of(other)
        if not isinstance(other, ExactScalar):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for exp, (re, im) in self._terms.items():
            lam = "lambda" if exp == 1 else f"lambda^{exp}"
            if exp == 0:
                text = _fmt_gauss(re, im)
            elif (re, im) == (1, 0):
                text = lam
            elif (re, im) == (-1, 0):
                text = f"-{lam}"
            else:
                text = f"{_fmt_gauss(re, im)}*{lam}"
            if not parts:
                parts.append(text)
            elif text.startswith("-"):
                parts.append(f"- {text[1:]}")
            else:
                parts.append(f"+ {text}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"ExactScalar({self})"


ZERO = ExactScalar()
ONE = ExactScalar.of(1)
I_UNIT = ExactScalar.gaussian(0, 1)
LAMBDA = ExactScalar.gaussian(1, 0, power=1)
