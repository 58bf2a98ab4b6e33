"""
Cycle Analysis - Circuit Thermo
Algebraic values, affinities, fluxes and heat/entropy/power contributions of single circuits
"""

import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from .steady_state import SteadyState, minor_determinant
from ..graph_core.circuits import Circuit, Cycle
from ..graph_core.rate_graph import RateGraph
from ..utils.errors import ReconciliationError, SteadyStateError
from ..utils.logger import get_logger

logger = get_logger(__name__)

AFFINITY_AGREEMENT = 1e-10
ZERO_AFFINITY_FACTOR = 1e-9

TRIVIAL = "trivial"
HEAT_LEAK = "heat_leak"
TRICYCLE = "tricycle"


@dataclass(frozen=True)
class Affinities:
    """Per-bath affinities X^α of an oriented cycle and their sum."""

    per_bath: Dict[str, float]
    total: float

    def __neg__(self) -> "Affinities":
        return Affinities({k: -v for k, v in self.per_bath.items()}, -self.total)


@dataclass
class CircuitReport:
    """Thermodynamic contribution of one circuit in its canonical orientation."""

    circuit: Circuit
    affinities: Affinities
    flux: float
    heat: Dict[str, float]
    entropy: float
    power: float
    circuit_class: str
    minor_det: float
    label: str = ""
    extras: Dict[str, float] = field(default_factory=dict)

    @property
    def length(self) -> int:
        return len(self.circuit)


def algebraic_values(cycle: Cycle, graph: RateGraph) -> Dict[str, float]:
    """
    A^α: product of the directed rates of the bath-α edges along the cycle.

    Baths the cycle does not touch get A^α = 1. Edges are multiplied in
    canonical circuit order for both orientations, so reversal swaps factors
    without reordering them.

    Args:
        cycle: Oriented circuit
        graph: Owning graph

    Returns:
        Mapping bath label -> A^α for every bath of the graph
    """
    values = {label: 1.0 for label in graph.baths}
    for edge, sign in cycle.directions(graph):
        values[edge.bath] *= edge.rate_up if sign > 0 else edge.rate_down
    return values


def affinity(cycle: Cycle, graph: RateGraph) -> Affinities:
    """
    X^α = ln(A^α(C) / A^α(−C)), checked against −Σ σ_e Ω_e / T_α.

    The two forms must agree to 1e-10 relative; the quantum form is returned
    so that trivial circuits give exact zeros.

    Args:
        cycle: Oriented circuit
        graph: Owning graph

    Returns:
        Affinities over the thermal baths

    Raises:
        ReconciliationError: If the two forms disagree
    """
    thermal = graph.thermal_baths()
    from_quanta = {label: 0.0 for label in thermal}
    from_rates = {label: 0.0 for label in thermal}
    scale = {label: 0.0 for label in thermal}

    for edge, sign in cycle.directions(graph):
        temperature = thermal[edge.bath].temperature
        from_quanta[edge.bath] -= sign * edge.quantum / temperature
        from_rates[edge.bath] += sign * (math.log(edge.rate_up) - math.log(edge.rate_down))
        scale[edge.bath] += edge.quantum / temperature

    for label in thermal:
        tolerance = AFFINITY_AGREEMENT * max(scale[label], 1.0)
        if abs(from_quanta[label] - from_rates[label]) > tolerance:
            raise ReconciliationError(
                f"affinity mismatch on bath {label}: rates {from_rates[label]:.17g}, quanta {from_quanta[label]:.17g}"
            )

    return Affinities(from_quanta, sum(from_quanta.values()))


def circuit_flux(cycle: Cycle, graph: RateGraph, steady: SteadyState) -> float:
    """
    I(C) = D⁻¹ det(−W|C) [A(C) − A(−C)].

    Args:
        cycle: Oriented circuit
        graph: Graph the steady state was computed for
        steady: Steady state carrying W and D

    Returns:
        Cycle flux; I(−C) = −I(C)

    Raises:
        SteadyStateError: If the circuit minor is not positive
    """
    minor = minor_determinant(steady.rate_matrix, cycle.circuit.vertex_set)
    if not minor > 0:
        raise SteadyStateError(f"circuit minor det(-W|C) = {minor} is not positive for {cycle.circuit.vertex_seq}")
    return _flux_from_parts(cycle, graph, steady.normalization, minor)


def _flux_from_parts(cycle: Cycle, graph: RateGraph, normalization: float, minor: float) -> float:
    forward = math.prod(algebraic_values(cycle, graph).values())
    backward = math.prod(algebraic_values(cycle.reversed(), graph).values())
    return minor * (forward - backward) / normalization


def classify(circuit: Circuit, graph: RateGraph, affinities: Optional[Affinities] = None) -> str:
    """
    Trivial, heat leak or tricycle.

    Three thermal baths: trivial when every X^α vanishes, tricycle when none
    does, heat leak otherwise. With a work source: trivial when X^c = X^h = 0,
    heat leak when Σ T_α X^α = 0, tricycle otherwise. Zero tests use
    1e-9 · (largest quantum / lowest temperature).

    Args:
        circuit: Circuit to classify
        graph: Owning graph
        affinities: Canonical-orientation affinities if already computed

    Returns:
        One of 'trivial', 'heat_leak', 'tricycle'
    """
    affinities = affinities or affinity(Cycle(circuit, 1), graph)
    thermal = graph.thermal_baths()
    max_quantum = max(edge.quantum for edge in graph.edges)
    min_temperature = min(bath.temperature for bath in thermal.values())
    tolerance = ZERO_AFFINITY_FACTOR * max_quantum / min_temperature

    nonzero = [label for label, x in affinities.per_bath.items() if abs(x) > tolerance]

    if graph.has_work_source():
        if not nonzero:
            return TRIVIAL
        energy = sum(thermal[label].temperature * x for label, x in affinities.per_bath.items())
        if abs(energy) <= ZERO_AFFINITY_FACTOR * max_quantum:
            return HEAT_LEAK
        return TRICYCLE

    if not nonzero:
        return TRIVIAL
    if len(nonzero) == len(thermal):
        return TRICYCLE
    return HEAT_LEAK


def circuit_currents(circuit: Circuit, graph: RateGraph, steady: SteadyState) -> CircuitReport:
    """
    Heat, entropy and power carried by one circuit.

    Q̇_α(C) = −T_α I(C) X^α(C) and Ṡ(C) = I(C) X(C), both orientation
    independent. P(C) = −Σ_α Q̇_α(C) with a work source, zero otherwise.

    Args:
        circuit: Circuit to evaluate
        graph: Graph the steady state was computed for
        steady: Steady state

    Returns:
        CircuitReport for the canonical orientation
    """
    cycle = Cycle(circuit, 1)
    affinities = affinity(cycle, graph)
    minor = minor_determinant(steady.rate_matrix, circuit.vertex_set)
    if not minor > 0:
        raise SteadyStateError(f"circuit minor det(-W|C) = {minor} is not positive for {circuit.vertex_seq}")
    flux = _flux_from_parts(cycle, graph, steady.normalization, minor)

    thermal = graph.thermal_baths()
    heat = {label: -thermal[label].temperature * flux * x for label, x in affinities.per_bath.items()}
    power = -sum(heat.values()) if graph.has_work_source() else 0.0

    return CircuitReport(
        circuit=circuit,
        affinities=affinities,
        flux=flux,
        heat=heat,
        entropy=flux * affinities.total,
        power=power,
        circuit_class=classify(circuit, graph, affinities),
        minor_det=minor,
        label=circuit.label(graph),
    )


def circuit_reports(circuits: List[Circuit], graph: RateGraph, steady: SteadyState) -> List[CircuitReport]:
    """CircuitReport for every circuit, in the given order."""
    return [circuit_currents(circuit, graph, steady) for circuit in circuits]
