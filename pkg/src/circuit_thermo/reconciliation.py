"""
Reconciliation - Circuit Thermo
Circuit-sum totals against direct edge sums, per bath and per edge
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional

from .cycle_analysis import CircuitReport, circuit_reports
from .steady_state import SteadyState, direct_currents
from ..graph_core.circuits import Circuit, Cycle
from ..graph_core.rate_graph import RateGraph
from ..utils.errors import ReconciliationError
from ..utils.logger import get_logger

logger = get_logger(__name__)

RECONCILIATION_TOLERANCE = 1e-8


@dataclass
class TotalsReport:
    """Totals from both routes and the worst relative disagreement between them."""

    circuit_heat: Dict[str, float]
    direct_heat: Dict[str, float]
    circuit_power: Optional[float]
    direct_power: Optional[float]
    circuit_entropy: float
    direct_entropy: float
    heat_discrepancy: float
    entropy_discrepancy: float
    edge_discrepancy: float
    edge_circuit_sums: Dict[int, float] = field(default_factory=dict)
    edge_direct: Dict[int, float] = field(default_factory=dict)
    reports: List[CircuitReport] = field(default_factory=list)

    @property
    def max_relative_discrepancy(self) -> float:
        return max(self.heat_discrepancy, self.entropy_discrepancy, self.edge_discrepancy)


def _relative(a: float, b: float, gross: float) -> float:
    scale = max(abs(a), abs(b), gross)
    return abs(a - b) / scale if scale > 0 else 0.0


def total_currents(
    graph: RateGraph,
    circuits: List[Circuit],
    steady: SteadyState,
    reports: Optional[List[CircuitReport]] = None,
    tolerance: float = RECONCILIATION_TOLERANCE,
) -> TotalsReport:
    """
    Sum circuit contributions and compare them with the direct edge sums.

    Relative errors are taken against the gross scale (sum of absolute
    contributions), since totals pass through zero inside the sweep ranges.

    Args:
        graph: Rate graph
        circuits: Complete circuit set
        steady: Steady state for the graph
        reports: Precomputed reports for circuits, same order
        tolerance: Maximum allowed relative discrepancy

    Returns:
        TotalsReport with both totals and the discrepancies

    Raises:
        ReconciliationError: If any discrepancy exceeds tolerance
    """
    reports = reports if reports is not None else circuit_reports(circuits, graph, steady)
    direct = direct_currents(graph, steady.populations)
    thermal = graph.thermal_baths()

    circuit_heat = {label: 0.0 for label in thermal}
    gross_heat = {label: 0.0 for label in thermal}
    for report in reports:
        for label, q in report.heat.items():
            circuit_heat[label] += q
            gross_heat[label] += abs(q)

    heat_discrepancy = max(
        (_relative(circuit_heat[label], direct["heat"][label], max(gross_heat[label], direct["gross"][label]))
         for label in thermal),
        default=0.0,
    )

    circuit_entropy = sum(report.entropy for report in reports)
    direct_entropy = -sum(q / thermal[label].temperature for label, q in direct["heat"].items())
    gross_entropy = sum(abs(report.entropy) for report in reports)
    entropy_discrepancy = _relative(circuit_entropy, direct_entropy, gross_entropy)

    edge_sums = {edge.id: 0.0 for edge in graph.edges}
    edge_gross = {edge.id: 0.0 for edge in graph.edges}
    for report in reports:
        for edge, sign in Cycle(report.circuit, 1).directions(graph):
            edge_sums[edge.id] += sign * report.flux
            edge_gross[edge.id] += abs(report.flux)
    edge_discrepancy = max(
        (_relative(edge_sums[e], direct["edges"][e], edge_gross[e]) for e in edge_sums),
        default=0.0,
    )

    circuit_power = direct_power = None
    if graph.has_work_source():
        circuit_power = sum(report.power for report in reports)
        direct_power = -sum(direct["heat"].values())

    totals = TotalsReport(
        circuit_heat=circuit_heat,
        direct_heat=dict(direct["heat"]),
        circuit_power=circuit_power,
        direct_power=direct_power,
        circuit_entropy=circuit_entropy,
        direct_entropy=direct_entropy,
        heat_discrepancy=heat_discrepancy,
        entropy_discrepancy=entropy_discrepancy,
        edge_discrepancy=edge_discrepancy,
        edge_circuit_sums=edge_sums,
        edge_direct=dict(direct["edges"]),
        reports=reports,
    )

    if totals.max_relative_discrepancy > tolerance:
        raise ReconciliationError(
            f"circuit sums disagree with direct currents: heat {heat_discrepancy:.3g}, "
            f"entropy {entropy_discrepancy:.3g}, edges {edge_discrepancy:.3g}"
        )

    logger.debug(f"Reconciled {len(reports)} circuits, max relative discrepancy {totals.max_relative_discrepancy:.2e}")
    return totals
