from typing import Any, Iterable, Optional

from prolongation_kit.settings.constants import EXIT_USAGE, EXIT_VERIFICATION


class WorkbenchError(Exception):
    def __init__(self, detail: Any = None, exit_code: int = EXIT_USAGE) -> None:
        super().__init__(detail)
        self.detail = detail
        self.exit_code = exit_code


class UsageError(WorkbenchError):
    def __init__(self, detail: str = "Uso inválido"):
        super().__init__(detail=detail, exit_code=EXIT_USAGE)


class VerificationFailure(WorkbenchError):
    def __init__(self, detail: str = "Verificación fallida"):
        super().__init__(detail=detail, exit_code=EXIT_VERIFICATION)


class CoefficientMismatchError(WorkbenchError, TypeError):
    def __init__(self, left: type, right: type):
        super().__init__(detail=f"Coefficient algebras differ: {left.__name__} vs {right.__name__}")
        self.left = left
        self.right = right


class CyclicBindingError(WorkbenchError):
    def __init__(self, cycle: Iterable[Any]):
        self.cycle = list(cycle)
        super().__init__(detail="Cyclic substitution: " + " -> ".join(str(s) for s in self.cycle))


class FormDegreeError(WorkbenchError):
    def __init__(self, degree: int, limit: int):
        super().__init__(detail=f"Form degree {degree} exceeds the maximum {limit}")
        self.degree = degree


class RewriteCycleError(WorkbenchError):
    def __init__(self, trace: list[str]):
        self.trace = trace
        super().__init__(detail="Rewrite did not terminate; last states: " + "; ".join(trace[-5:]))


class ClosingInconsistencyError(WorkbenchError):
    def __init__(self, relation: Any, pair: Optional[tuple[int, int]] = None):
        self.relation = relation
        self.pair = pair
        where = f" at [X{pair[0]},X{pair[1]}]" if pair else ""
        super().__init__(detail=f"Closing map forces {relation} = 0{where}")


class InconsistentRelationError(WorkbenchError):
    def __init__(self, relation: Any, witness: Any):
        self.relation = relation
        self.witness = witness
        super().__init__(detail=f"Inconsistent relation {relation} from monomial {witness}")


class SingularMatrixError(WorkbenchError):
    def __init__(self, detail: str = "Matrix is not invertible over the coefficient ring"):
        super().__init__(detail=detail)


class UncoveredGeneratorError(WorkbenchError):
    def __init__(self, generator: int):
        self.generator = generator
        super().__init__(detail=f"Representation does not cover X{generator}")


class StabilityError(WorkbenchError):
    def __init__(self, dt: float, bound: float):
        self.dt = dt
        self.bound = bound
        super().__init__(detail=f"Time step {dt:.3e} exceeds the explicit bound {bound:.3e}")


class NumericalBlowupError(WorkbenchError):
    def __init__(self, step: int):
        self.step = step
        super().__init__(detail=f"Non-finite values after step {step}", exit_code=EXIT_VERIFICATION)


class JetOrderError(WorkbenchError):
    def __init__(self, symbol: Any):
        self.symbol = symbol
        super().__init__(detail=f"Jet symbol {symbol} is beyond second order")


class DslSyntaxError(WorkbenchError):
    def __init__(self, line: int, column: int, expected: Iterable[str], text: str = ""):
        self.line = line
        self.column = column
        self.expected = sorted(set(expected))
        self.text = text
        super().__init__(
            detail=f"Syntax error at line {line}, column {column}; expected one of: {', '.join(self.expected)}"
        )


class ConstraintViolationError(WorkbenchError):
    def __init__(self, detail: str = "Field leaves the constraint manifold"):
        super().__init__(detail=detail)
