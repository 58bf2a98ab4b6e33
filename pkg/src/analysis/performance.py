"""
Performance - Analysis
Operating point evaluation: totals, operating mode and figure of merit
"""

import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from ..circuit_thermo.cycle_analysis import CircuitReport, circuit_reports
from ..circuit_thermo.reconciliation import TotalsReport, total_currents
from ..circuit_thermo.steady_state import analyze_steady_state
from ..graph_core.circuits import Circuit, enumerate_circuits
from ..graph_core.rate_graph import RateGraph
from ..models.registry import get_model, model_name_for
from ..utils.logger import get_logger

logger = get_logger(__name__)

REFRIGERATOR = "refrigerator"
ENGINE = "engine"
DISSIPATOR = "dissipator"
FAILED = "failed"


@dataclass
class PerformancePoint:
    """
    Totals and performance at one cold frequency.

    heat holds Q̇_c, Q̇_h and, for absorption devices, Q̇_w. power is set for
    driven devices only. merit is ε (refrigerator) or η (engine).
    """

    omega_c: float
    heat: Dict[str, float] = field(default_factory=dict)
    power: Optional[float] = None
    entropy_rate: float = math.nan
    merit: Optional[float] = None
    merit_kind: Optional[str] = None
    mode: str = FAILED
    error: Optional[str] = None
    circuit_heat: Dict[str, Dict[str, float]] = field(default_factory=dict)
    circuit_power: Dict[str, float] = field(default_factory=dict)
    representative_heat: Dict[str, float] = field(default_factory=dict)
    representative_power: Optional[float] = None
    max_discrepancy: float = math.nan

    @property
    def failed(self) -> bool:
        return self.mode == FAILED


def carnot_bounds(params) -> Dict[str, float]:
    """
    Carnot limits for the model's baths.

    Absorption devices: ε_C = T_c(T_w − T_h)/[T_w(T_h − T_c)].
    Driven devices: ε_C = T_c/(T_h − T_c), η_C = 1 − T_c/T_h.
    """
    baths = params.baths
    t_c, t_h = baths["c"].temperature, baths["h"].temperature
    if get_model(model_name_for(params)).driven:
        return {"cop": t_c / (t_h - t_c), "efficiency": 1.0 - t_c / t_h}
    t_w = baths["w"].temperature
    return {"cop": t_c * (t_w - t_h) / (t_w * (t_h - t_c))}


def operating_mode(heat: Dict[str, float], power: Optional[float], driven: bool) -> str:
    """
    Mode from current signs only.

    Absorption: refrigerator iff Q̇_c > 0. Driven: refrigerator iff Q̇_c > 0
    and P > 0, engine iff P < 0 and Q̇_h > 0. Everything else dissipates.
    """
    if not driven:
        return REFRIGERATOR if heat["c"] > 0 else DISSIPATOR
    if heat["c"] > 0 and power > 0:
        return REFRIGERATOR
    if power < 0 and heat["h"] > 0:
        return ENGINE
    return DISSIPATOR


def figure_of_merit(
    heat: Dict[str, float], power: Optional[float], mode: str, driven: bool
) -> Tuple[Optional[float], Optional[str]]:
    """ε = Q̇_c/Q̇_w or Q̇_c/P for refrigerators, η = −P/Q̇_h for engines."""
    if mode == REFRIGERATOR:
        return (heat["c"] / power if driven else heat["c"] / heat["w"]), "cop"
    if mode == ENGINE:
        return -power / heat["h"], "efficiency"
    return None, None


@dataclass
class PointEvaluation:
    """Everything computed at one parameter point."""

    graph: RateGraph
    point: PerformancePoint
    reports: List[CircuitReport]
    totals: TotalsReport
    warnings: Tuple[str, ...] = ()


class PointEvaluator:
    """Builds a model at given parameters and decomposes its steady state."""

    def __init__(self, model: str):
        """
        Initialize point evaluator.

        Args:
            model: Registry name of the model
        """
        self.spec = get_model(model)
        self.logger = get_logger(__name__)
        self._circuits: Optional[List[Circuit]] = None
        self._topology: Optional[Tuple] = None

    @property
    def circuits(self) -> List[Circuit]:
        """Circuit set of the last evaluated topology (empty before any evaluation)."""
        return list(self._circuits or [])

    def circuits_for(self, graph: RateGraph) -> List[Circuit]:
        """Enumerate once per topology; edge ids and endpoints fix the circuit set."""
        topology = tuple(sorted((e.id, min(e.tail, e.head), max(e.tail, e.head)) for e in graph.edges))
        if self._circuits is None or topology != self._topology:
            self._circuits = enumerate_circuits(graph)
            self._topology = topology
            self.logger.debug(f"{self.spec.name}: {len(self._circuits)} circuits")
        return self._circuits

    def evaluate(self, params) -> PointEvaluation:
        """
        Evaluate one parameter point.

        Args:
            params: Model parameters

        Returns:
            PointEvaluation with reconciled totals

        Raises:
            ModelError: Invalid parameters at this point
            ReconciliationError: Circuit sums disagree with direct currents
        """
        build = self.spec.builder(params)
        graph = build.graph
        circuits = self.circuits_for(graph)
        steady = analyze_steady_state(graph)
        reports = circuit_reports(circuits, graph, steady)
        totals = total_currents(graph, circuits, steady, reports)

        heat = dict(steady.per_bath_currents)
        mode = operating_mode(heat, steady.power, self.spec.driven)
        merit, merit_kind = figure_of_merit(heat, steady.power, mode, self.spec.driven)

        point = PerformancePoint(
            omega_c=params.omega_c,
            heat=heat,
            power=steady.power,
            entropy_rate=steady.entropy_rate,
            merit=merit,
            merit_kind=merit_kind,
            mode=mode,
            max_discrepancy=totals.max_relative_discrepancy,
        )
        return PointEvaluation(graph, point, reports, totals, build.warnings)


def evaluate_point(model: str, params) -> PointEvaluation:
    """One-off evaluation of a parameter point."""
    return PointEvaluator(model).evaluate(params)
