import logging
from functools import wraps
from typing import Any, Callable

from prolongation_kit.errors.exceptions import (
    DslSyntaxError,
    NumericalBlowupError,
    UsageError,
    VerificationFailure,
    WorkbenchError,
)
from prolongation_kit.settings.constants import EXIT_USAGE

logger = logging.getLogger(__name__)


def handle_command_errors(func: Callable[..., int]) -> Callable[..., int]:
    @wraps(func)
    def wrapper(*args, **kwargs) -> int:
        try:
            return func(*args, **kwargs)
        except DslSyntaxError as exc:
            logger.warning("Error de sintaxis: %s", exc.detail)
            return exc.exit_code
        except UsageError as exc:
            logger.warning("Uso inválido: %s", exc.detail)
            return exc.exit_code
        except VerificationFailure as exc:
            logger.warning("Verificación fallida: %s", exc.detail)
            return exc.exit_code
        except NumericalBlowupError as exc:
            logger.error("Inestabilidad numérica: %s", exc.detail)
            return exc.exit_code
        except WorkbenchError as exc:
            logger.error("Error del banco de trabajo: %s", exc.detail)
            return exc.exit_code
        except ValueError as exc:
            logger.warning("Error de validación: %s", exc)
            return EXIT_USAGE
        except Exception as exc:
            logger.error("Error inesperado: %s", exc, exc_info=True)
            return EXIT_USAGE

    return wrapper


def reraise_as_usage(func: Callable) -> Callable:
    @wraps(func)
    def wrapper(*args, **kwargs) -> Any:
        try:
            return func(*args, **kwargs)
        except WorkbenchError:
            raise
        except (TypeError, ValueError) as exc:
            logger.error("Entrada inválida: %s", exc, exc_info=True)
            raise UsageError(detail=str(exc))

    return wrapper
