"""
Error Types
Exception hierarchy shared by every module; each class knows its CLI exit code
"""

from typing import List, Optional


class WireThermoError(Exception):
    """Base class for all errors raised by the package."""

    exit_code = 1


class ConfigError(WireThermoError, ValueError):
    """Invalid run configuration."""

    exit_code = 2

    def __init__(self, field_path: str, message: str):
        """
        Initialize configuration error.

        Args:
            field_path: Dot path of the offending field (e.g. 'parameters.baths.c.temperature')
            message: Human readable reason
        """
        self.field_path = field_path
        self.message = message
        super().__init__(f"{field_path}: {message}")


class ModelError(WireThermoError, ValueError):
    """Physical parameters outside the validity range of a model."""

    exit_code = 2


class GraphValidationError(WireThermoError, ValueError):
    """Rate graph violates the structure of a master equation."""

    exit_code = 3

    def __init__(self, message: str, violations: Optional[List[str]] = None):
        self.violations = list(violations or [])
        detail = f" ({'; '.join(self.violations)})" if self.violations else ""
        super().__init__(f"{message}{detail}")


class SteadyStateError(WireThermoError, ArithmeticError):
    """Rate matrix has no unique positive steady state."""

    exit_code = 3


class ReconciliationError(WireThermoError, ArithmeticError):
    """Circuit decomposition disagrees with the direct steady-state currents."""

    exit_code = 3


class CrosscheckError(WireThermoError, ArithmeticError):
    """Analytic coefficient tables disagree with numeric diagonalization."""

    exit_code = 3


class OutputError(WireThermoError, OSError):
    """Output file could not be written."""

    exit_code = 4
