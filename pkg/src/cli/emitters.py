"""
Emitters - CLI
Deterministic CSV and JSON rendering of command results
"""

import json
import math
import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional

import numpy as np
import pandas as pd

from ..utils.errors import OutputError
from ..utils.logger import get_logger

logger = get_logger(__name__)

SCHEMA_VERSION = "1.0"
UNITS = "hbar = k_B = omega_0 = 1"
CSV_FLOAT_FORMAT = "%.17g"


@dataclass
class OutputTable:
    """One command result: a table with a fixed column order and a summary mapping."""

    model: str
    command: str
    frame: pd.DataFrame
    summary: Dict[str, Any] = field(default_factory=dict)

    @property
    def columns(self) -> List[str]:
        return [str(c) for c in self.frame.columns]


def _plain(value: Any) -> Any:
    """Python scalar for JSON: NaN and None become null."""
    if value is None:
        return None
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        return None if math.isnan(value) or math.isinf(value) else value
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    return value


def emit_csv(table: OutputTable) -> str:
    """CSV text: header row, %.17g floats, empty cells for missing values, '\\n' line ends."""
    return table.frame.to_csv(index=False, float_format=CSV_FLOAT_FORMAT, na_rep="", lineterminator="\n")


def emit_json(table: OutputTable) -> str:
    """JSON document matching config/output.schema.json; floats use shortest round-trip form."""
    rows = [[_plain(v) for v in row] for row in table.frame.itertuples(index=False, name=None)]
    document = {
        "schema_version": SCHEMA_VERSION,
        "model": table.model,
        "command": table.command,
        "units": UNITS,
        "columns": table.columns,
        "rows": rows,
        "summary": _plain(table.summary),
    }
    return json.dumps(document, indent=2, sort_keys=False, allow_nan=False, ensure_ascii=False) + "\n"


def render(table: OutputTable, output_format: str) -> str:
    if output_format == "csv":
        return emit_csv(table)
    if output_format == "json":
        return emit_json(table)
    raise OutputError(f"unknown output format '{output_format}'")


def write_output(text: str, path: str) -> None:
    """
    Write rendered output to a file.

    A partially written file is removed before the error is raised.

    Raises:
        OutputError: If the file cannot be written
    """
    target = Path(path)
    try:
        if target.parent and not target.parent.exists():
            target.parent.mkdir(parents=True, exist_ok=True)
        with open(target, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
    except OSError as e:
        remove_partial(path)
        raise OutputError(f"cannot write {path}: {e}")
    logger.info(f"Wrote {len(text)} bytes to {path}")


def remove_partial(path: Optional[str]) -> None:
    """Delete an output file if it exists; used on any failed run."""
    if path and os.path.exists(path):
        try:
            os.remove(path)
            logger.debug(f"Removed partial output {path}")
        except OSError as e:
            logger.warning(f"Could not remove partial output {path}: {e}")
