"""
Utils Module - Shared Utilities
Logging, configuration and error types
"""

from .config_manager import ConfigManager
from .errors import (
    ConfigError,
    CrosscheckError,
    GraphValidationError,
    ModelError,
    OutputError,
    ReconciliationError,
    SteadyStateError,
    WireThermoError,
)
from .logger import get_logger, setup_logging

__all__ = [
    'ConfigManager', 'setup_logging', 'get_logger',
    'WireThermoError', 'ConfigError', 'ModelError', 'GraphValidationError',
    'SteadyStateError', 'ReconciliationError', 'CrosscheckError', 'OutputError',
]
