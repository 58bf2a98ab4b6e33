"""
CLI Module
Run configuration, command dispatch and deterministic output
"""

from .emitters import OutputTable, emit_csv, emit_json, render, write_output
from .run_config import RunConfig, config_from_mapping, dump_config, load_config, parse_config
from .runner import CommandRunner, census_line, run

__all__ = [
    'RunConfig', 'parse_config', 'load_config', 'config_from_mapping', 'dump_config',
    'OutputTable', 'emit_csv', 'emit_json', 'render', 'write_output',
    'CommandRunner', 'census_line', 'run',
]
