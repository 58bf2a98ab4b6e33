"""
Integration fixtures: CLI runner, config files and logging isolation
"""

import json
import logging
from pathlib import Path

import pytest
from click.testing import CliRunner

PROJECT_ROOT = Path(__file__).resolve().parents[2]
SCHEMA_PATH = PROJECT_ROOT / "config" / "output.schema.json"


@pytest.fixture(autouse=True)
def restore_root_logger(monkeypatch):
    """The CLI binds its console handler to the runner's stderr; undo that after each run."""
    for name in ("LOG_LEVEL", "WIRETHERMO_LOG_FILE", "WIRETHERMO_MAX_WORKERS"):
        monkeypatch.delenv(name, raising=False)
    root = logging.getLogger()
    handlers, level = list(root.handlers), root.level
    yield
    for handler in root.handlers:
        if handler not in handlers:
            handler.close()
    root.handlers[:] = handlers
    root.setLevel(level)


@pytest.fixture
def cli():
    return CliRunner()


@pytest.fixture(scope="session")
def output_schema():
    return json.loads(SCHEMA_PATH.read_text())


@pytest.fixture
def write_config(tmp_path):
    """Write a configuration mapping to a JSON file and return its path."""
    def write(config, name="run.json"):
        path = tmp_path / name
        path.write_text(json.dumps(config))
        return str(path)
    return write
