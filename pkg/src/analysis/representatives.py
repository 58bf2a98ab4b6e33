"""
Representatives - Analysis
Small circuit subsets whose summed currents capture the device performance
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from ..circuit_thermo.cycle_analysis import CircuitReport
from ..graph_core.circuits import Circuit
from ..models.registry import model_name_for
from ..utils.errors import ModelError

ABSORPTION_REPRESENTATIVES = ((1, 3, 4), (1, 3, 5))
WEAK_WIRE_REPRESENTATIVES = ((1, 4), (2, 5))
STRONG_WIRE_REPRESENTATIVES = ((1, 6), (2, 3))


@dataclass
class RepresentativeSet:
    """Chosen circuits and, once reports are supplied, their combined currents."""

    circuits: Tuple[Circuit, ...]
    labels: Tuple[str, ...]
    tie: bool = False
    heat: Dict[str, float] = field(default_factory=dict)
    power: Optional[float] = None

    def combine(self, reports: Sequence[CircuitReport]) -> "RepresentativeSet":
        """Fill Q̇^R_α (and P^R for driven devices) from matching circuit reports."""
        chosen = set(self.circuits)
        selected = [r for r in reports if r.circuit in chosen]
        if len(selected) != len(chosen):
            raise ModelError("circuit reports do not cover every representative")
        heat: Dict[str, float] = {}
        for report in selected:
            for label, q in report.heat.items():
                heat[label] = heat.get(label, 0.0) + q
        self.heat = heat
        self.power = sum(r.power for r in selected)
        return self


def _lookup(circuits: Sequence[Circuit], vertex_seq: Tuple[int, ...]) -> List[Circuit]:
    return [c for c in circuits if c.vertex_seq == vertex_seq]


def select_representatives(
    params,
    circuits: Sequence[Circuit],
    reports: Optional[Sequence[CircuitReport]] = None,
) -> RepresentativeSet:
    """
    Pick the circuit representatives of a model.

    Absorption wire: the two cold three-edge tricycles 1-3-4 and 1-3-5.
    Driven wire: C(1,4) and C(2,5) when g/λ < 1, C(1,6) and C(2,3) when
    g/λ > 1, both pairs (flagged as a tie) when g = λ. Three-level baselines
    keep all their circuits.

    Args:
        params: Model parameters
        circuits: Enumerated circuit set
        reports: Optional reports to combine into Q̇^R

    Returns:
        RepresentativeSet

    Raises:
        ModelError: If a representative is missing from the circuit set
    """
    model = model_name_for(params)
    tie = False
    if model == "absorption_wire":
        wanted = ABSORPTION_REPRESENTATIVES
    elif model == "driven_wire":
        ratio = params.g / params.lam
        if ratio < 1:
            wanted = WEAK_WIRE_REPRESENTATIVES
        elif ratio > 1:
            wanted = STRONG_WIRE_REPRESENTATIVES
        else:
            wanted = WEAK_WIRE_REPRESENTATIVES + STRONG_WIRE_REPRESENTATIVES
            tie = True
    else:
        wanted = tuple(c.vertex_seq for c in circuits)

    chosen: List[Circuit] = []
    for vertex_seq in wanted:
        matches = _lookup(circuits, vertex_seq)
        if not matches:
            raise ModelError(f"representative circuit {vertex_seq} missing from enumeration")
        if model == "driven_wire":
            # the two-edge circuit on this pair; four-edge circuits never share its vertex sequence
            matches = [c for c in matches if len(c) == 2]
        for circuit in matches:
            if circuit not in chosen:
                chosen.append(circuit)

    labels = tuple(_representative_label(model, c) for c in chosen)
    selection = RepresentativeSet(tuple(chosen), labels, tie)
    if reports is not None:
        selection.combine(reports)
    return selection


def _representative_label(model: str, circuit: Circuit) -> str:
    if model == "driven_wire" and len(circuit) == 2:
        i, j = circuit.vertex_seq
        return f"C{i}{j}"
    return "C" + "".join(str(v) for v in circuit.vertex_seq)
