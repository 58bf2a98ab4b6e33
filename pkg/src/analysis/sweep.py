"""
Sweep - Analysis
Uniform cold-frequency sweeps with per-point reconciliation
"""

import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import FrozenSet, List, Optional

import numpy as np
import pandas as pd

from .performance import FAILED, PerformancePoint, PointEvaluator
from .representatives import select_representatives
from ..graph_core.circuits import Circuit
from ..models.registry import get_model, model_name_for
from ..utils.errors import ModelError
from ..utils.logger import get_logger

logger = get_logger(__name__)

OUTPUTS = frozenset({"totals", "circuits", "representatives"})


@dataclass(frozen=True)
class SweepSpec:
    """Model parameters, ω_c range, point count and requested outputs."""

    params: object
    lo: float
    hi: float
    points: int = 200
    outputs: FrozenSet[str] = frozenset({"totals"})
    max_workers: int = 1

    def __post_init__(self):
        if not self.lo < self.hi:
            raise ModelError(f"sweep range needs lo < hi, got [{self.lo}, {self.hi}]")
        if self.points < 2:
            raise ModelError(f"sweep needs at least 2 points, got {self.points}")
        unknown = set(self.outputs) - OUTPUTS
        if unknown:
            raise ModelError(f"unknown sweep outputs {sorted(unknown)}")
        if self.max_workers < 1:
            raise ModelError("max_workers must be at least 1")

    @property
    def model(self) -> str:
        return model_name_for(self.params)

    def grid(self) -> np.ndarray:
        return np.linspace(self.lo, self.hi, self.points)


@dataclass
class SweepResult:
    """Points in grid order plus the circuit set used for the decomposition."""

    spec: SweepSpec
    points: List[PerformancePoint]
    circuits: List[Circuit] = field(default_factory=list)
    circuit_labels: List[str] = field(default_factory=list)
    representative_labels: List[str] = field(default_factory=list)

    @property
    def driven(self) -> bool:
        return get_model(self.spec.model).driven

    def successful(self) -> List[PerformancePoint]:
        return [p for p in self.points if not p.failed]


class SweepRunner:
    """Evaluates a SweepSpec point by point."""

    def __init__(self, spec: SweepSpec):
        """
        Initialize sweep runner.

        Args:
            spec: Sweep specification
        """
        self.spec = spec
        self.evaluator = PointEvaluator(spec.model)
        self.logger = get_logger(__name__)
        self._lock = threading.Lock()
        self._warned = set()
        self._circuit_labels: List[str] = []
        self._representative_labels: List[str] = []

    def _evaluate(self, omega_c: float) -> PerformancePoint:
        params = self.spec.params.with_omega_c(float(omega_c))
        try:
            evaluation = self.evaluator.evaluate(params)
        except ModelError as e:
            self.logger.debug(f"Point ω_c = {omega_c:.6g} failed: {e}")
            return PerformancePoint(omega_c=float(omega_c), mode=FAILED, error=str(e))

        for message in evaluation.warnings:
            with self._lock:
                fresh = message not in self._warned
                self._warned.add(message)
            if fresh:
                self.logger.warning(message)

        point = evaluation.point
        if "circuits" in self.spec.outputs:
            for report in evaluation.reports:
                point.circuit_heat[report.label] = dict(report.heat)
                if self.evaluator.spec.driven:
                    point.circuit_power[report.label] = report.power
            with self._lock:
                if not self._circuit_labels:
                    self._circuit_labels = [r.label for r in evaluation.reports]
        if "representatives" in self.spec.outputs:
            selection = select_representatives(params, [r.circuit for r in evaluation.reports], evaluation.reports)
            point.representative_heat = dict(selection.heat)
            point.representative_power = selection.power if self.evaluator.spec.driven else None
            with self._lock:
                if not self._representative_labels:
                    self._representative_labels = list(selection.labels)
        return point

    def run(self) -> SweepResult:
        """
        Evaluate every grid point.

        Failed model builds are recorded and the sweep continues; reconciliation
        failures propagate.

        Returns:
            SweepResult in grid order
        """
        grid = self.spec.grid()
        self.logger.info(
            f"Sweeping {self.spec.model}: ω_c in [{self.spec.lo}, {self.spec.hi}], {self.spec.points} points"
        )

        if self.spec.max_workers > 1:
            # warm the circuit cache before threads share the evaluator
            self._evaluate(grid[0])
            with ThreadPoolExecutor(max_workers=self.spec.max_workers) as executor:
                points = list(executor.map(self._evaluate, grid))
        else:
            points = [self._evaluate(omega) for omega in grid]

        failed = sum(p.failed for p in points)
        if failed:
            self.logger.warning(f"{failed} of {len(points)} sweep points failed")
        self.logger.info(f"Sweep finished: {len(points) - failed} points evaluated")

        return SweepResult(
            spec=self.spec,
            points=points,
            circuits=self.evaluator.circuits,
            circuit_labels=self._circuit_labels,
            representative_labels=self._representative_labels,
        )


def sweep(spec: SweepSpec) -> SweepResult:
    """Run a sweep."""
    return SweepRunner(spec).run()


def sweep_frame(result: SweepResult) -> pd.DataFrame:
    """
    Tabulate a sweep with a fixed column order.

    Columns: omega_c, Qc, Qh, then Qw (absorption) or P (driven), S, merit,
    merit_kind, mode, error; then Qc_R, Qh_R, Qw_R|P_R when representatives
    were requested; then Q<bath>[label] (and P[label]) per circuit.
    """
    driven = result.driven
    third = "P" if driven else "Qw"
    outputs = result.spec.outputs
    baths = ("c", "h") if driven else ("c", "h", "w")

    columns = ["omega_c", "Qc", "Qh", third, "S", "merit", "merit_kind", "mode", "error"]
    if "representatives" in outputs:
        columns += ["Qc_R", "Qh_R", f"{third}_R"]
    if "circuits" in outputs:
        for label in result.circuit_labels:
            columns += [f"Q{b}[{label}]" for b in baths]
            if driven:
                columns.append(f"P[{label}]")

    rows = []
    for point in result.points:
        row = {
            "omega_c": point.omega_c,
            "Qc": point.heat.get("c", np.nan),
            "Qh": point.heat.get("h", np.nan),
            third: (point.power if point.power is not None else np.nan) if driven else point.heat.get("w", np.nan),
            "S": point.entropy_rate,
            "merit": point.merit if point.merit is not None else np.nan,
            "merit_kind": point.merit_kind or "",
            "mode": point.mode,
            "error": point.error or "",
        }
        if "representatives" in outputs:
            rep = point.representative_heat
            row["Qc_R"] = rep.get("c", np.nan)
            row["Qh_R"] = rep.get("h", np.nan)
            if driven:
                row["P_R"] = point.representative_power if point.representative_power is not None else np.nan
            else:
                row["Qw_R"] = rep.get("w", np.nan)
        if "circuits" in outputs:
            for label in result.circuit_labels:
                heat = point.circuit_heat.get(label, {})
                for b in baths:
                    row[f"Q{b}[{label}]"] = heat.get(b, np.nan)
                if driven:
                    row[f"P[{label}]"] = point.circuit_power.get(label, np.nan)
        rows.append(row)

    return pd.DataFrame(rows, columns=columns)
