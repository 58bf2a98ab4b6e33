"""
Rate Graph - Graph Core
Master equation of a thermal device stored as a labeled undirected multigraph
"""

import math
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Dict, List, Mapping, Tuple

import networkx as nx
import numpy as np

from ..utils.errors import GraphValidationError
from ..utils.logger import get_logger

if TYPE_CHECKING:
    from ..models.baths import BathSpec

logger = get_logger(__name__)

KMS_TOLERANCE = 1e-12


@dataclass(frozen=True)
class Vertex:
    """System eigenstate; index is 1-based, eigenfrequency in units of ω_0."""

    index: int
    eigenfrequency: float


@dataclass(frozen=True)
class Edge:
    """
    One bath-induced transition channel between two eigenstates.

    The tail is the lower-frequency endpoint, so rate_up (tail -> head) is
    absorption of a quantum from the bath and rate_down is emission.
    """

    id: int
    tail: int
    head: int
    bath: str
    quantum: float
    rate_up: float
    rate_down: float

    def endpoints(self) -> Tuple[int, int]:
        return self.tail, self.head

    def other(self, vertex: int) -> int:
        """Endpoint opposite to vertex."""
        if vertex == self.tail:
            return self.head
        if vertex == self.head:
            return self.tail
        raise ValueError(f"vertex {vertex} is not an endpoint of edge {self.id}")

    def rate_from(self, vertex: int) -> float:
        """Transition rate leaving vertex along this edge."""
        return self.rate_up if vertex == self.tail else self.rate_down


@dataclass(frozen=True)
class RateGraph:
    """Connected multigraph of eigenstates with per-edge bath, quantum and rates."""

    vertices: Tuple[Vertex, ...]
    edges: Tuple[Edge, ...]
    baths: Mapping[str, "BathSpec"] = field(default_factory=dict)

    @property
    def size(self) -> int:
        return len(self.vertices)

    def edge(self, edge_id: int) -> Edge:
        for edge in self.edges:
            if edge.id == edge_id:
                return edge
        raise KeyError(f"edge {edge_id} not in graph")

    def edge_map(self) -> Dict[int, Edge]:
        return {edge.id: edge for edge in self.edges}

    def thermal_baths(self) -> Dict[str, "BathSpec"]:
        return {label: bath for label, bath in self.baths.items() if bath.kind == "thermal"}

    def has_work_source(self) -> bool:
        return any(bath.kind == "work_source" for bath in self.baths.values())

    def to_networkx(self) -> nx.MultiGraph:
        """Undirected networkx view keyed by edge id."""
        graph = nx.MultiGraph()
        graph.add_nodes_from(v.index for v in self.vertices)
        for edge in self.edges:
            graph.add_edge(edge.tail, edge.head, key=edge.id, bath=edge.bath, quantum=edge.quantum)
        return graph


@dataclass
class ValidationReport:
    """Outcome of validate_graph."""

    violations: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.passed


def validate_graph(graph: RateGraph) -> ValidationReport:
    """
    Check the structure a Pauli master equation requires.

    Args:
        graph: Rate graph to check

    Returns:
        ValidationReport listing every violation found (empty when valid)
    """
    report = ValidationReport()
    indices = [v.index for v in graph.vertices]

    if sorted(indices) != list(range(1, len(indices) + 1)):
        report.violations.append(f"vertex indices are not contiguous 1..N: {sorted(indices)}")
    for vertex in graph.vertices:
        if not math.isfinite(vertex.eigenfrequency):
            report.violations.append(f"vertex {vertex.index}: non-finite eigenfrequency")

    seen = set()
    known = set(indices)
    for edge in graph.edges:
        if edge.id in seen:
            report.violations.append(f"duplicate edge id {edge.id}")
        seen.add(edge.id)

        if edge.tail not in known or edge.head not in known:
            report.violations.append(f"edge {edge.id}: endpoint outside vertex set")
        if edge.tail == edge.head:
            report.violations.append(f"edge {edge.id}: self-loop")
        if edge.quantum < 0 or not math.isfinite(edge.quantum):
            report.violations.append(f"edge {edge.id}: invalid quantum {edge.quantum}")
        if not (edge.rate_up > 0 and edge.rate_down > 0):
            report.violations.append(f"edge {edge.id}: nonpositive rate")
            continue

        bath = graph.baths.get(edge.bath)
        if bath is None:
            report.violations.append(f"edge {edge.id}: unknown bath '{edge.bath}'")
            continue
        if bath.kind != "thermal" or bath.temperature is None:
            report.violations.append(f"edge {edge.id}: bath '{edge.bath}' is not thermal")
            continue

        expected = math.exp(-edge.quantum / bath.temperature)
        ratio = edge.rate_up / edge.rate_down
        if abs(ratio - expected) > KMS_TOLERANCE * expected:
            report.violations.append(
                f"edge {edge.id}: KMS violation (ratio {ratio:.17g}, expected {expected:.17g})"
            )

    if graph.vertices and not nx.is_connected(graph.to_networkx()):
        report.violations.append("graph is disconnected")

    return report


def rate_matrix(graph: RateGraph) -> Tuple[np.ndarray, Dict[str, np.ndarray]]:
    """
    Assemble the rate matrix W and its per-bath parts W^α.

    Column j holds the rates leaving state j; diagonals make each column sum to zero.

    Args:
        graph: Valid rate graph

    Returns:
        Tuple of (W, {bath label: W^α})

    Raises:
        GraphValidationError: If the graph fails validation
    """
    report = validate_graph(graph)
    if not report.passed:
        raise GraphValidationError("invalid rate graph", report.violations)

    n = graph.size
    per_bath = {label: np.zeros((n, n)) for label in graph.baths}

    for edge in graph.edges:
        t, h = edge.tail - 1, edge.head - 1
        w_alpha = per_bath[edge.bath]
        w_alpha[h, t] += edge.rate_up
        w_alpha[t, h] += edge.rate_down

    for w_alpha in per_bath.values():
        w_alpha[np.diag_indices(n)] = -w_alpha.sum(axis=0)

    total = np.zeros((n, n))
    for w_alpha in per_bath.values():
        total += w_alpha

    logger.debug(f"Rate matrix assembled: {n} states, {len(graph.edges)} edges")
    return total, per_bath
