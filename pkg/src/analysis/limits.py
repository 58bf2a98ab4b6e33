"""
Limits - Analysis
Cooling-window edges and limit frequencies: closed forms checked by flux zero crossings
"""

import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from scipy.optimize import bisect

from ..circuit_thermo.cycle_analysis import TRICYCLE, circuit_currents, circuit_flux
from ..circuit_thermo.steady_state import steady_state
from ..graph_core.circuits import Circuit, Cycle, enumerate_circuits
from ..graph_core.rate_graph import rate_matrix
from ..models.absorption_wire import AbsorptionWireParams, build_absorption_wire
from ..models.driven_wire import DrivenWireParams, build_driven_wire, eigenfrequencies
from ..models.registry import build_model
from ..utils.errors import ModelError
from ..utils.logger import get_logger

logger = get_logger(__name__)

BISECTION_XTOL = 1e-12
EDGE_MARGIN = 1e-6

# name, canonical vertex sequence
ABSORPTION_TRICYCLES: Tuple[Tuple[str, Tuple[int, ...]], ...] = (
    ("C1", (1, 3, 4)),
    ("C2", (1, 3, 5)),
    ("C3", (1, 2, 5)),
    ("C4", (1, 2, 4)),
    ("C5", (2, 5, 6)),
    ("C6", (2, 4, 6)),
    ("C8", (1, 4, 6, 2, 5)),
)


@dataclass
class CircuitLimit:
    """Zero-flux frequency of one circuit: closed form (when known) and bisection."""

    name: str
    circuit: Circuit
    closed_form: Optional[float]
    bisection: Optional[float]

    @property
    def deviation(self) -> Optional[float]:
        if self.closed_form is None or self.bisection is None:
            return None
        return abs(self.closed_form - self.bisection)


@dataclass
class CoolingWindowReport:
    """Global reversal frequency and the per-circuit window edges of the absorption wire."""

    omega_rev: float
    limits: List[CircuitLimit] = field(default_factory=list)
    dissipation_interval: Tuple[float, float] = (math.nan, math.nan)

    def limit(self, name: str) -> CircuitLimit:
        for entry in self.limits:
            if entry.name == name:
                return entry
        raise KeyError(name)

    @property
    def spread(self) -> Tuple[float, float]:
        """Smallest and largest located zero crossing among the three-edge tricycles."""
        values = [l.bisection for l in self.limits if l.bisection is not None and len(l.circuit) == 3]
        return (min(values), max(values)) if values else (math.nan, math.nan)


@dataclass
class DrivenLimitsReport:
    """Limit frequencies of the driven wire machine."""

    omega_c_max: float
    eta_carnot: float
    cop_carnot: float
    halfwidth: float
    two_edge: List[CircuitLimit] = field(default_factory=list)
    four_edge: List[CircuitLimit] = field(default_factory=list)

    def limit(self, name: str) -> CircuitLimit:
        for entry in self.two_edge + self.four_edge:
            if entry.name == name:
                return entry
        raise KeyError(name)

    @property
    def two_edge_span(self) -> Tuple[float, float]:
        values = [l.closed_form for l in self.two_edge]
        return min(values), max(values)


def dissipation_halfwidth(g: float, lam: float) -> float:
    """
    f(λ, g) = [λ + g + (4λ² + g²)^½] / 2.

    Raises:
        ModelError: For negative arguments or g = λ = 0
    """
    if g < 0 or lam < 0 or (g == 0 and lam == 0):
        raise ModelError("dissipation_halfwidth needs g, λ >= 0, not both zero")
    return (lam + g + math.sqrt(4.0 * lam * lam + g * g)) / 2.0


def reversal_frequency(params, circuit: Circuit, lo: float, hi: float) -> Optional[float]:
    """
    ω_c at which the flux of a circuit changes sign, by bisection on [lo, hi].

    Args:
        params: Model parameters (ω_c is replaced during the search)
        circuit: Circuit whose flux is followed
        lo: Lower bracket
        hi: Upper bracket

    Returns:
        Zero crossing, or None when the flux has the same sign at both ends
    """
    cycle = Cycle(circuit, 1)

    def flux(omega_c: float) -> float:
        graph = build_model(params.with_omega_c(omega_c)).graph
        W, _ = rate_matrix(graph)
        return circuit_flux(cycle, graph, steady_state(W))

    f_lo, f_hi = flux(lo), flux(hi)
    if f_lo == 0.0:
        return lo
    if f_hi == 0.0:
        return hi
    if (f_lo > 0) == (f_hi > 0):
        return None
    return bisect(flux, lo, hi, xtol=BISECTION_XTOL)


def global_reversal_frequency(params: AbsorptionWireParams) -> float:
    """ω_rev = ω_h T_c (T_w − T_h) / [T_h (T_w − T_c)]."""
    t_c, t_h, t_w = (params.baths[k].temperature for k in ("c", "h", "w"))
    return params.omega_h * t_c * (t_w - t_h) / (t_h * (t_w - t_c))


def absorption_closed_forms(params: AbsorptionWireParams) -> Dict[str, float]:
    """Window edges of C1..C6 and C8 at zero detuning."""
    t_c, t_h, t_w = (params.baths[k].temperature for k in ("c", "h", "w"))
    g = params.g
    omega_rev = global_reversal_frequency(params)
    cold_shift = g * t_c * (t_w - t_h) / (t_h * (t_w - t_c))
    work_shift = g * t_w * (t_h - t_c) / (t_h * (t_w - t_c))
    return {
        "C1": omega_rev - cold_shift,
        "C2": omega_rev + cold_shift,
        "C3": omega_rev - work_shift,
        "C4": omega_rev + work_shift,
        "C5": omega_rev - g,
        "C6": omega_rev + g,
        "C8": omega_rev + g * (2 * t_c * t_w - t_c * t_h - t_w * t_h) / (t_w * t_h - t_h * t_c),
    }


def cooling_window_bounds(params: AbsorptionWireParams) -> CoolingWindowReport:
    """
    Reversal frequencies of the absorption wire.

    At zero detuning each closed form is checked by bisection on a bracket of
    half-width 2g + 0.01 around it. With detuning the closed forms do not
    apply and the crossings are searched over the default sweep range.

    Args:
        params: Absorption wire parameters

    Returns:
        CoolingWindowReport
    """
    omega_rev = global_reversal_frequency(params)
    graph = build_absorption_wire(params).graph
    circuits = {c.vertex_seq: c for c in enumerate_circuits(graph)}

    closed = absorption_closed_forms(params) if params.delta == 0 else {}
    lower_bound = params.g + EDGE_MARGIN
    upper_bound = params.omega_h - params.delta - params.g - EDGE_MARGIN

    report = CoolingWindowReport(omega_rev, dissipation_interval=(omega_rev - params.g, omega_rev + params.g))
    for name, vertex_seq in ABSORPTION_TRICYCLES:
        circuit = circuits[vertex_seq]
        estimate = closed.get(name)
        if estimate is not None:
            half_width = 2.0 * params.g + 0.01
            lo, hi = max(estimate - half_width, lower_bound), min(estimate + half_width, upper_bound)
        else:
            lo, hi = lower_bound, upper_bound
        located = reversal_frequency(params, circuit, lo, hi) if lo < hi else None
        report.limits.append(CircuitLimit(name, circuit, estimate, located))
        logger.debug(f"{name} {vertex_seq}: closed form {estimate}, bisection {located}")

    return report


def limit_frequencies_driven(params: DrivenWireParams) -> DrivenLimitsReport:
    """
    Limit frequencies of the driven wire.

    Two-edge circuits C(i,j): ω_c,max − (ω_j − ω_i) η_C. Four-edge tricycles
    alternating cold and hot edges: ω_c,max − (ω_j + ω_j') η_C / 2. Every
    closed form is checked by bisection.

    Args:
        params: Driven wire parameters

    Returns:
        DrivenLimitsReport
    """
    t_c, t_h = params.baths["c"].temperature, params.baths["h"].temperature
    eta = 1.0 - t_c / t_h
    omega_c_max = params.omega_h * t_c / t_h
    omegas = eigenfrequencies(params.g, params.lam)

    report = DrivenLimitsReport(
        omega_c_max=omega_c_max,
        eta_carnot=eta,
        cop_carnot=t_c / (t_h - t_c),
        halfwidth=dissipation_halfwidth(params.g, params.lam),
    )

    graph = build_driven_wire(params).graph
    circuits = enumerate_circuits(graph)
    steady = steady_state(rate_matrix(graph)[0])

    # every quantum ω_c + ω_j − ω_i must stay positive
    lower_bound = max(omegas[i - 1] - omegas[j - 1] for i in (1, 2) for j in (3, 4, 5, 6)) + EDGE_MARGIN
    upper_bound = params.omega_h - EDGE_MARGIN

    def locate(circuit: Circuit, estimate: float) -> Optional[float]:
        half_width = 2.0 * report.halfwidth * eta + 0.01
        lo, hi = max(estimate - half_width, lower_bound), min(estimate + half_width, upper_bound)
        return reversal_frequency(params, circuit, lo, hi) if lo < hi else None

    for circuit in circuits:
        if len(circuit) == 2:
            i, j = circuit.vertex_seq
            estimate = omega_c_max - (omegas[j - 1] - omegas[i - 1]) * eta
            report.two_edge.append(CircuitLimit(f"C{i}{j}", circuit, estimate, locate(circuit, estimate)))
        elif len(circuit) == 4:
            baths = [graph.edge(e).bath for e in circuit.edge_ids]
            if baths.count("c") != 2 or circuit_currents(circuit, graph, steady).circuit_class != TRICYCLE:
                continue
            upper = [v for v in circuit.vertex_seq if v > 2]
            estimate = omega_c_max - (omegas[upper[0] - 1] + omegas[upper[1] - 1]) * eta / 2.0
            name = "C" + "".join(str(v) for v in circuit.vertex_seq) + "[" + "".join(baths) + "]"
            report.four_edge.append(CircuitLimit(name, circuit, estimate, locate(circuit, estimate)))

    logger.info(
        f"Driven limits: ω_c,max = {omega_c_max:.6g}, {len(report.two_edge)} two-edge and "
        f"{len(report.four_edge)} four-edge tricycles located"
    )
    return report
