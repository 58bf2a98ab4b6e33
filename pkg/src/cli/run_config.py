"""
Run Configuration - CLI
Parsing, validation and canonical re-emission of run configurations
"""

import json
import math
from dataclasses import dataclass, field, replace
from typing import Any, Dict, FrozenSet, Optional, Tuple

from ..analysis.sweep import OUTPUTS, SweepSpec
from ..models.baths import THERMAL, BathSpec
from ..models.registry import MODELS, get_model
from ..utils.config_manager import ConfigManager
from ..utils.errors import ConfigError, ModelError

COMMANDS = ("enumerate", "steady", "circuits", "sweep", "representatives", "crosscheck")
FORMATS = ("csv", "json")
DEFAULT_COMMAND = "sweep"
DEFAULT_FORMAT = "csv"
DEFAULT_POINTS = 200

TOP_LEVEL_KEYS = ("model", "command", "parameters", "sweep", "output", "logging")
SWEEP_KEYS = ("range", "points", "outputs", "max_workers")
OUTPUT_KEYS = ("format", "path")
BATH_KEYS = ("temperature", "dimension", "coupling")

# scalar fields that must be strictly positive; Δ may take either sign
POSITIVE_FIELDS = frozenset({"omega_c", "omega_h", "g", "lam"})


@dataclass(frozen=True)
class RunConfig:
    """
    A validated run: model parameters, command, sweep settings and output target.

    output_path None means stdout.
    """

    model: str
    command: str
    params: Any
    sweep_range: Tuple[float, float]
    points: int = DEFAULT_POINTS
    outputs: FrozenSet[str] = frozenset({"totals"})
    max_workers: int = 1
    output_format: str = DEFAULT_FORMAT
    output_path: Optional[str] = None
    logging: Dict[str, Any] = field(default_factory=dict, compare=False)

    @property
    def driven(self) -> bool:
        return get_model(self.model).driven

    def sweep_spec(self) -> SweepSpec:
        """SweepSpec for the sweep-type commands; representatives always adds its output."""
        outputs = set(self.outputs)
        if self.command == "representatives":
            outputs.add("representatives")
        lo, hi = self.sweep_range
        return SweepSpec(
            params=self.params,
            lo=lo,
            hi=hi,
            points=self.points,
            outputs=frozenset(outputs),
            max_workers=self.max_workers,
        )

    def with_overrides(
        self,
        command: Optional[str] = None,
        output_path: Optional[str] = None,
        output_format: Optional[str] = None,
        points: Optional[int] = None,
        sweep_range: Optional[Tuple[float, float]] = None,
    ) -> "RunConfig":
        """Apply command-line overrides, validating them like config fields."""
        changes: Dict[str, Any] = {}
        if command is not None:
            changes["command"] = _choice(command, COMMANDS, "command")
        if output_path is not None:
            changes["output_path"] = output_path
        if output_format is not None:
            changes["output_format"] = _choice(output_format, FORMATS, "output.format")
        if points is not None:
            changes["points"] = _points(points, "sweep.points")
        if sweep_range is not None:
            changes["sweep_range"] = _range(list(sweep_range), "sweep.range")
        return replace(self, **changes)


def _number(value: Any, path: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(path, f"must be a number, got {value!r}")
    if not math.isfinite(value):
        raise ConfigError(path, "must be finite")
    return float(value)


def _choice(value: Any, choices: Tuple[str, ...], path: str) -> str:
    if value not in choices:
        raise ConfigError(path, f"must be one of {', '.join(choices)}, got {value!r}")
    return value


def _points(value: Any, path: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigError(path, f"must be an integer, got {value!r}")
    if value < 2:
        raise ConfigError(path, "out of range: at least 2 points")
    return value


def _range(value: Any, path: str) -> Tuple[float, float]:
    if not isinstance(value, (list, tuple)) or len(value) != 2:
        raise ConfigError(path, "must be a list [lo, hi]")
    lo, hi = _number(value[0], f"{path}[0]"), _number(value[1], f"{path}[1]")
    if not 0 < lo < hi:
        raise ConfigError(path, f"out of range: need 0 < lo < hi, got [{lo}, {hi}]")
    return lo, hi


def _mapping(value: Any, path: str) -> Dict[str, Any]:
    if value is None:
        return {}
    if not isinstance(value, dict):
        raise ConfigError(path, "must be a mapping")
    return value


def _reject_unknown(block: Dict[str, Any], allowed, path: str) -> None:
    for key in block:
        if key not in allowed:
            raise ConfigError(f"{path}.{key}" if path else str(key), "unknown field")


def _parse_baths(block: Dict[str, Any], defaults: Dict[str, BathSpec], labels, path: str) -> Dict[str, BathSpec]:
    baths = dict(defaults)
    for label, entry in block.items():
        bath_path = f"{path}.{label}"
        if label not in labels:
            raise ConfigError(bath_path, f"unknown bath; this model takes {', '.join(labels)}")
        entry = _mapping(entry, bath_path)
        _reject_unknown(entry, BATH_KEYS, bath_path)
        base = defaults[label]
        temperature = _number(entry.get("temperature", base.temperature), f"{bath_path}.temperature")
        coupling = _number(entry.get("coupling", base.coupling), f"{bath_path}.coupling")
        dimension = entry.get("dimension", base.dimension)
        if isinstance(dimension, bool) or not isinstance(dimension, int) or dimension < 1:
            raise ConfigError(f"{bath_path}.dimension", "out of range: must be a positive integer")
        if temperature <= 0:
            raise ConfigError(f"{bath_path}.temperature", "out of range: must be positive")
        if coupling <= 0:
            raise ConfigError(f"{bath_path}.coupling", "out of range: must be positive")
        baths[label] = BathSpec(label, temperature=temperature, dimension=dimension, coupling=coupling)
    return baths


def _parse_parameters(model: str, block: Dict[str, Any]):
    spec = get_model(model)
    defaults = spec.params_cls()
    _reject_unknown(block, spec.scalar_fields + ("baths",), "parameters")

    values: Dict[str, Any] = {}
    for name in spec.scalar_fields:
        if name in block:
            value = _number(block[name], f"parameters.{name}")
            if name in POSITIVE_FIELDS and value <= 0:
                raise ConfigError(f"parameters.{name}", "out of range: must be positive")
            values[name] = value
    values["baths"] = _parse_baths(
        _mapping(block.get("baths"), "parameters.baths"), defaults.baths, spec.thermal_baths, "parameters.baths"
    )

    params = replace(defaults, **values)
    try:
        params.validate()
    except ModelError as e:
        raise ConfigError("parameters", f"out of range: {e}")
    return params


def config_from_mapping(config: Dict[str, Any]) -> RunConfig:
    """
    Validate an already-loaded configuration mapping.

    Raises:
        ConfigError: With the dot path of the first offending field
    """
    _reject_unknown(config, TOP_LEVEL_KEYS, "")

    if "model" not in config or config["model"] is None:
        raise ConfigError("model", "missing field")
    model = config["model"]
    if not isinstance(model, str) or model not in MODELS:
        raise ConfigError("model", f"unknown model '{model}'")

    command = _choice(config.get("command", DEFAULT_COMMAND), COMMANDS, "command")
    params = _parse_parameters(model, _mapping(config.get("parameters"), "parameters"))

    sweep = _mapping(config.get("sweep"), "sweep")
    _reject_unknown(sweep, SWEEP_KEYS, "sweep")
    sweep_range = _range(sweep["range"], "sweep.range") if "range" in sweep else get_model(model).sweep_range
    points = _points(sweep.get("points", DEFAULT_POINTS), "sweep.points")
    outputs = sweep.get("outputs", ["totals"])
    if not isinstance(outputs, list) or not outputs:
        raise ConfigError("sweep.outputs", "must be a non-empty list")
    for k, name in enumerate(outputs):
        _choice(name, tuple(sorted(OUTPUTS)), f"sweep.outputs[{k}]")
    max_workers = sweep.get("max_workers", 1)
    if isinstance(max_workers, bool) or not isinstance(max_workers, int) or max_workers < 1:
        raise ConfigError("sweep.max_workers", "out of range: must be a positive integer")

    output = _mapping(config.get("output"), "output")
    _reject_unknown(output, OUTPUT_KEYS, "output")
    output_format = _choice(output.get("format", DEFAULT_FORMAT), FORMATS, "output.format")
    output_path = output.get("path")
    if output_path is not None and not isinstance(output_path, str):
        raise ConfigError("output.path", "must be a string")

    return RunConfig(
        model=model,
        command=command,
        params=params,
        sweep_range=sweep_range,
        points=points,
        outputs=frozenset(outputs),
        max_workers=max_workers,
        output_format=output_format,
        output_path=output_path,
        logging=_mapping(config.get("logging"), "logging"),
    )


def parse_config(text: str) -> RunConfig:
    """
    Parse and validate configuration text (JSON, or YAML as a superset).

    Missing parameters take the model defaults; environment overrides are
    applied by ConfigManager.

    Args:
        text: Configuration document

    Returns:
        Validated RunConfig

    Raises:
        ConfigError: Malformed text, unknown model, missing or out-of-range field
    """
    return config_from_mapping(ConfigManager(text=text).config)


def load_config(path: str) -> RunConfig:
    """Parse a configuration file; an unreadable file is a configuration error."""
    try:
        manager = ConfigManager(config_path=path)
    except OSError as e:
        raise ConfigError("--config", str(e))
    return config_from_mapping(manager.config)


def config_to_mapping(config: RunConfig) -> Dict[str, Any]:
    """Fully expanded configuration mapping; the logging section is left out."""
    spec = get_model(config.model)
    parameters: Dict[str, Any] = {name: getattr(config.params, name) for name in spec.scalar_fields}
    parameters["baths"] = {
        label: bath.to_dict()
        for label, bath in sorted(config.params.baths.items())
        if bath.kind == THERMAL
    }
    sweep: Dict[str, Any] = {
        "range": list(config.sweep_range),
        "points": config.points,
        "outputs": sorted(config.outputs),
        "max_workers": config.max_workers,
    }
    return {
        "model": config.model,
        "command": config.command,
        "parameters": parameters,
        "sweep": sweep,
        "output": {"format": config.output_format, "path": config.output_path},
    }


def dump_config(config: RunConfig) -> str:
    """Canonical JSON text: sorted keys, two-space indent, trailing newline."""
    return json.dumps(config_to_mapping(config), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


