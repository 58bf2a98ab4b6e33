"""
End-to-end tests of the command-line interface
"""

import json

import jsonschema
import pytest

import src.cli.runner as runner
from src.main import main

pytestmark = pytest.mark.integration

MODELS = ("absorption_wire", "driven_wire", "appendix_three_level", "direct_three_level")
COMMANDS = ("enumerate", "steady", "circuits", "sweep", "representatives", "crosscheck")


def invoke(cli, *args):
    return cli.invoke(main, list(args), catch_exceptions=False)


@pytest.mark.parametrize("model, census", [
    ("absorption_wire", "total=38 tricycles=22 heat_leaks=15 trivial=1"),
    ("driven_wire", "total=104 tricycles=68 heat_leaks=24 trivial=12"),
    ("appendix_three_level", "total=2 tricycles=2 heat_leaks=0 trivial=0"),
    ("direct_three_level", "total=1 tricycles=1 heat_leaks=0 trivial=0"),
])
def test_enumerate_census(cli, write_config, model, census):
    result = invoke(cli, "--config", write_config({"model": model, "command": "enumerate"}))
    assert result.exit_code == 0
    assert census in result.output
    assert "index,label,length,vertices,edges,baths,class" in result.output.splitlines()


def test_sweep_csv_to_file(cli, write_config, tmp_path):
    out = tmp_path / "results" / "sweep.csv"
    config = write_config({"model": "absorption_wire", "sweep": {"outputs": ["totals", "representatives"]}})
    result = invoke(cli, "--config", config, "--points", "5", "--range", "0.2:0.6", "--out", str(out))
    assert result.exit_code == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "omega_c,Qc,Qh,Qw,S,merit,merit_kind,mode,error,Qc_R,Qh_R,Qw_R"
    assert len(lines) == 6
    assert lines[1].startswith("0.20000000000000001,")


@pytest.mark.parametrize("model", MODELS)
@pytest.mark.parametrize("command", COMMANDS)
def test_json_output_matches_schema(cli, write_config, tmp_path, output_schema, model, command):
    out = tmp_path / f"{model}-{command}.json"
    config = write_config({"model": model, "command": command, "sweep": {"points": 4}})
    result = invoke(cli, "--config", config, "--format", "json", "--out", str(out))
    assert result.exit_code == 0
    document = json.loads(out.read_text())
    jsonschema.validate(document, output_schema)
    assert document["model"] == model
    assert document["command"] == command
    assert all(len(row) == len(document["columns"]) for row in document["rows"])


def test_crosscheck_passes(cli, write_config):
    result = invoke(cli, "--config", write_config({"model": "driven_wire", "command": "crosscheck"}))
    assert result.exit_code == 0
    assert "eigenfrequencies" in result.output
    assert "relaxation" in result.output


def test_failed_crosscheck_keeps_report(cli, write_config, tmp_path, monkeypatch):
    monkeypatch.setattr(runner, "RELAXATION_TOLERANCE", -1.0)
    out = tmp_path / "crosscheck.json"
    config = write_config({"model": "absorption_wire", "command": "crosscheck"})
    result = invoke(cli, "--config", config, "--format", "json", "--out", str(out))
    assert result.exit_code == 3
    summary = json.loads(out.read_text())["summary"]
    assert summary["passed"] is False
    assert summary["failed_checks"] == ["relaxation"]


@pytest.mark.parametrize("document, extra", [
    ({"model": "four_level"}, []),
    ({"model": "absorption_wire", "parameters": {"baths": {"c": {"temperature": -9.0}}}}, []),
    ({"model": "absorption_wire"}, ["--points", "1"]),
    ({"model": "absorption_wire"}, ["--range", "0.9:0.1"]),
    ({"model": "absorption_wire"}, ["--range", "low:high"]),
    ({"model": "absorption_wire"}, ["--seedless", "5"]),
])
def test_configuration_errors_exit_2(cli, write_config, document, extra):
    result = invoke(cli, "--config", write_config(document), *extra)
    assert result.exit_code == 2


def test_missing_config_exits_2(cli, tmp_path):
    result = invoke(cli, "--config", str(tmp_path / "absent.json"))
    assert result.exit_code == 2
    assert "--config" in result.output


def test_unwritable_output_exits_4(cli, write_config, tmp_path):
    blocker = tmp_path / "file.txt"
    blocker.write_text("")
    config = write_config({"model": "direct_three_level", "command": "steady"})
    result = invoke(cli, "--config", config, "--out", str(blocker / "out.csv"))
    assert result.exit_code == 4


def test_secular_violation_is_reported_per_point(cli, write_config, tmp_path):
    out = tmp_path / "sweep.csv"
    config = write_config({"model": "absorption_wire", "sweep": {"range": [0.05, 0.95], "points": 3}})
    result = invoke(cli, "--config", config, "--out", str(out))
    assert result.exit_code == 0
    modes = [row.split(",")[7] for row in out.read_text().splitlines()[1:]]
    assert modes[0] == modes[2] == "failed"
    assert modes[1] != "failed"


def test_steady_rejects_invalid_point(cli, write_config):
    config = write_config({"model": "absorption_wire", "command": "steady", "parameters": {"omega_c": 0.05}})
    result = invoke(cli, "--config", config)
    assert result.exit_code == 2


def test_runs_are_byte_identical(cli, write_config, tmp_path):
    outputs = []
    for run in range(2):
        produced = []
        for command in COMMANDS:
            out = tmp_path / f"run{run}-{command}.csv"
            config = write_config({"model": "driven_wire", "command": command, "sweep": {"points": 6}}, f"{command}.json")
            assert invoke(cli, "--config", config, "--out", str(out)).exit_code == 0
            produced.append(out.read_bytes())
        outputs.append(produced)
    assert outputs[0] == outputs[1]


def test_seedless_flag_changes_nothing(cli, write_config, tmp_path):
    config = write_config({"model": "driven_wire", "command": "circuits"})
    plain, seedless = tmp_path / "plain.csv", tmp_path / "seedless.csv"
    assert invoke(cli, "--config", config, "--out", str(plain)).exit_code == 0
    result = invoke(cli, "--config", config, "--out", str(seedless), "--seedless", "--log-level", "INFO")
    assert result.exit_code == 0
    assert "nothing to seed" in result.output
    assert seedless.read_bytes() == plain.read_bytes()
