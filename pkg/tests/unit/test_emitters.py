"""
Tests for CSV/JSON rendering and output files
"""

import json

import numpy as np
import pandas as pd
import pytest

from src.cli.emitters import OutputTable, emit_csv, emit_json, remove_partial, render, write_output
from src.utils.errors import OutputError


@pytest.fixture
def table():
    frame = pd.DataFrame({
        "omega_c": [0.1, 0.2],
        "Qc": [1.0 / 3.0, np.nan],
        "count": np.array([3, 4], dtype=np.int64),
        "mode": ["refrigerator", "failed"],
    })
    return OutputTable("absorption_wire", "sweep", frame, {"census": {"total": np.int64(38)}, "merit": np.float64(np.nan)})


def test_csv(table):
    text = emit_csv(table)
    lines = text.split("\n")
    assert lines[0] == "omega_c,Qc,count,mode"
    assert lines[1] == "0.10000000000000001,0.33333333333333331,3,refrigerator"
    assert lines[2] == "0.20000000000000001,,4,failed"
    assert text.endswith("\n")
    assert float(lines[1].split(",")[1]) == 1.0 / 3.0


def test_json(table):
    document = json.loads(emit_json(table))
    assert document["schema_version"] == "1.0"
    assert document["model"] == "absorption_wire"
    assert document["columns"] == ["omega_c", "Qc", "count", "mode"]
    assert document["rows"][0] == [0.1, 1.0 / 3.0, 3, "refrigerator"]
    assert document["rows"][1][1] is None
    assert document["summary"] == {"census": {"total": 38}, "merit": None}


def test_render_dispatch(table):
    assert render(table, "csv") == emit_csv(table)
    assert render(table, "json") == emit_json(table)
    with pytest.raises(OutputError, match="unknown output format"):
        render(table, "xml")


def test_write_creates_directories(tmp_path):
    target = tmp_path / "results" / "sweep.csv"
    write_output("a,b\n1,2\n", str(target))
    assert target.read_text() == "a,b\n1,2\n"


def test_write_under_a_file_fails(tmp_path):
    blocker = tmp_path / "file.txt"
    blocker.write_text("")
    with pytest.raises(OutputError) as excinfo:
        write_output("a\n", str(blocker / "out.csv"))
    assert excinfo.value.exit_code == 4


def test_remove_partial(tmp_path):
    target = tmp_path / "partial.csv"
    target.write_text("a\n")
    remove_partial(str(target))
    assert not target.exists()
    remove_partial(str(target))
    remove_partial(None)
