#!/usr/bin/env python3
"""
Wire Thermo - Main Application
Circuit decomposition of steady-state quantum thermal machines

This is the command-line entry point. It loads a run configuration,
applies command-line overrides, sets up logging and dispatches the command.
"""

import sys
from typing import Optional, Tuple

import click

from .cli.run_config import COMMANDS, FORMATS, RunConfig, load_config
from .cli.runner import run
from .utils.errors import ConfigError, WireThermoError
from .utils.logger import get_logger, setup_logging


def parse_range(text: str) -> Tuple[float, float]:
    """'lo:hi' -> (lo, hi)."""
    parts = text.split(":")
    if len(parts) != 2:
        raise ConfigError("--range", f"expected lo:hi, got {text!r}")
    try:
        return float(parts[0]), float(parts[1])
    except ValueError:
        raise ConfigError("--range", f"expected two numbers, got {text!r}")


class WireThermo:
    """Main application class: configuration, logging and command dispatch."""

    def __init__(self, config_path: str, log_level: Optional[str] = None):
        self.config_path = config_path
        self.log_level = log_level
        self.config: Optional[RunConfig] = None
        self.logger = get_logger(__name__)

    def initialize(self, **overrides) -> None:
        """Load and validate the configuration, then configure logging."""
        self.config = load_config(self.config_path).with_overrides(**overrides)

        logging_section = self.config.logging
        setup_logging(
            level=self.log_level or logging_section.get("level", "WARNING"),
            log_file=logging_section.get("file"),
            max_file_size=logging_section.get("max_file_size", "10MB"),
            backup_count=logging_section.get("backup_count", 5),
            color=logging_section.get("color", True),
        )
        self.logger.info(f"Initialized {self.config.command} for {self.config.model} from {self.config_path}")

    def run(self) -> int:
        return run(self.config)


@click.command()
@click.option("--config", "config_path", required=True, type=click.Path(dir_okay=False), help="Run configuration (JSON)")
@click.option("--command", type=click.Choice(COMMANDS), help="Override the configured command")
@click.option("--out", "out_path", type=click.Path(dir_okay=False), help="Output file (default: stdout)")
@click.option("--format", "output_format", type=click.Choice(FORMATS), help="Output format")
@click.option("--points", type=int, help="Number of sweep points")
@click.option("--range", "range_text", help="Sweep range lo:hi")
@click.option("--seedless", is_flag=True, help="Reserved: the program uses no randomness")
@click.option("--log-level", type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR"], case_sensitive=False))
def main(config_path, command, out_path, output_format, points, range_text, seedless, log_level):
    """Wire Thermo - circuit decomposition of quantum thermal machines."""
    app = WireThermo(config_path, log_level)
    try:
        app.initialize(
            command=command,
            output_path=out_path,
            output_format=output_format,
            points=points,
            sweep_range=parse_range(range_text) if range_text is not None else None,
        )
    except ConfigError as e:
        setup_logging(level=log_level or "WARNING")
        app.logger.error(f"Invalid configuration: {e}")
        click.echo(f"config error: {e}", err=True)
        sys.exit(e.exit_code)
    except WireThermoError as e:
        app.logger.error(f"Initialization failed: {e}")
        sys.exit(e.exit_code)

    if seedless:
        app.logger.info("--seedless given: runs are deterministic, nothing to seed")
    sys.exit(app.run())


if __name__ == "__main__":
    main()
