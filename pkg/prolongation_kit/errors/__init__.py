from .error_handlers import handle_command_errors, reraise_as_usage
from .exceptions import (
    ClosingInconsistencyError,
    ConstraintViolationError,
    CoefficientMismatchError,
    CyclicBindingError,
    DslSyntaxError,
    FormDegreeError,
    InconsistentRelationError,
    JetOrderError,
    NumericalBlowupError,
    RewriteCycleError,
    SingularMatrixError,
    StabilityError,
    UncoveredGeneratorError,
    UsageError,
    VerificationFailure,
    WorkbenchError,
)

__all__ = [
    "handle_command_errors",
    "reraise_as_usage",
    "ClosingInconsistencyError",
    "ConstraintViolationError",
    "CoefficientMismatchError",
    "CyclicBindingError",
    "DslSyntaxError",
    "FormDegreeError",
    "InconsistentRelationError",
    "JetOrderError",
    "NumericalBlowupError",
    "RewriteCycleError",
    "SingularMatrixError",
    "StabilityError",
    "UncoveredGeneratorError",
    "UsageError",
    "VerificationFailure",
    "WorkbenchError",
]
