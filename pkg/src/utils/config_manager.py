"""
Configuration Manager
Handles loading run configurations (JSON or YAML) and environment overrides
"""

import copy
import json
import os
from typing import Any, Dict, Optional

import yaml

from .errors import ConfigError


class ConfigManager:
    """Manages a run configuration loaded from a JSON/YAML file or text."""

    def __init__(self, config_path: Optional[str] = None, text: Optional[str] = None):
        """
        Initialize configuration manager.

        Args:
            config_path: Path to config file
            text: Raw configuration text; takes precedence over config_path

        Raises:
            FileNotFoundError: If the config file does not exist
            ConfigError: If the text is not a JSON/YAML mapping
        """
        if text is None and config_path is None:
            raise ValueError("ConfigManager needs a config path or configuration text")
        self.text = text
        self.config_path = None if text is not None else config_path
        self.config = self._load_config()

    def _load_config(self) -> Dict[str, Any]:
        """Load configuration text and apply environment overrides."""
        if self.text is not None:
            raw = self.text
        else:
            try:
                with open(self.config_path, 'r', encoding='utf-8') as file:
                    raw = file.read()
            except FileNotFoundError:
                raise FileNotFoundError(f"Configuration file not found: {self.config_path}")

        # JSON first: YAML 1.1 reads exponents such as 1e-06 as strings
        try:
            config = json.loads(raw)
        except json.JSONDecodeError:
            try:
                config = yaml.safe_load(raw)
            except yaml.YAMLError as e:
                raise ConfigError("<root>", f"invalid JSON/YAML: {e}")

        if config is None:
            config = {}
        if not isinstance(config, dict):
            raise ConfigError("<root>", "configuration must be a mapping")

        return self._override_with_env_vars(config)

    def _override_with_env_vars(self, config: Dict[str, Any]) -> Dict[str, Any]:
        """Override configuration with environment variables."""
        if 'LOG_LEVEL' in os.environ:
            config.setdefault('logging', {})['level'] = os.environ['LOG_LEVEL']
        if 'WIRETHERMO_LOG_FILE' in os.environ:
            config.setdefault('logging', {})['file'] = os.environ['WIRETHERMO_LOG_FILE']
        if 'WIRETHERMO_MAX_WORKERS' in os.environ:
            try:
                workers = int(os.environ['WIRETHERMO_MAX_WORKERS'])
            except ValueError:
                raise ConfigError("sweep.max_workers", "WIRETHERMO_MAX_WORKERS must be an integer")
            sweep = config.get('sweep')
            if not isinstance(sweep, dict):
                sweep = {}
                config['sweep'] = sweep
            sweep['max_workers'] = workers

        return config

    def get(self, key: str, default: Any = None) -> Any:
        """
        Get configuration value using dot notation.

        Args:
            key: Configuration key in dot notation (e.g., 'parameters.baths.c.temperature')
            default: Default value if key not found

        Returns:
            Configuration value or default
        """
        value = self.config

        for k in key.split('.'):
            if isinstance(value, dict) and k in value:
                value = value[k]
            else:
                return default

        return value

    def get_section(self, section: str) -> Dict[str, Any]:
        """
        Get a copy of an entire configuration section.

        Args:
            section: Section name

        Returns:
            Configuration section as dictionary (empty if absent)
        """
        value = self.config.get(section, {})
        return copy.deepcopy(value) if isinstance(value, dict) else {}

    def __str__(self) -> str:
        source = self.config_path or "<text>"
        return f"ConfigManager(source={source}, sections={sorted(self.config)})"
