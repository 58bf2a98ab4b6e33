"""
Absorption Wire - Models
Three-level absorption refrigerator coupled to the work bath through a two-level wire
"""

import math
from dataclasses import dataclass, field, replace
from typing import Dict, List, Tuple

from .base import DerivedCoefficients, ModelBuild, require_baths, transition_edge
from .baths import BathSpec
from ..graph_core.rate_graph import RateGraph, Vertex
from ..utils.errors import ModelError

# Product basis ordering: (device level, wire level) -> state label before mixing
# 1: 1D1W, 2: 1D2W, 3: 2D1W, 4/5: mix of 3D1W and 2D2W, 6: 3D2W

# (i, j, bath, weight key), in edge-id order
EDGE_TABLE: Tuple[Tuple[int, int, str, str], ...] = (
    (1, 2, "w", "one"),
    (1, 3, "c", "one"),
    (1, 4, "h", "cp_minus_sq"),
    (1, 5, "h", "cp_plus_sq"),
    (2, 4, "c", "c_minus_sq"),
    (2, 5, "c", "c_plus_sq"),
    (2, 6, "h", "one"),
    (3, 4, "w", "c_minus_sq"),
    (3, 5, "w", "c_plus_sq"),
    (4, 6, "w", "cp_minus_sq"),
    (5, 6, "w", "cp_plus_sq"),
)

GAMMA_OVER_G_LIMIT = 0.1
G_OVER_OMEGA_C_LIMIT = 0.5


def default_baths() -> Dict[str, BathSpec]:
    return {
        "c": BathSpec("c", temperature=9.0),
        "h": BathSpec("h", temperature=10.0),
        "w": BathSpec("w", temperature=20.0),
    }


@dataclass(frozen=True)
class AbsorptionWireParams:
    """
    Device frequencies ω_c, ω_h, wire-device coupling g and detuning Δ.

    The wire frequency follows from ω_w = ω_h - ω_c - Δ.
    """

    omega_c: float = 0.7
    omega_h: float = 1.0
    g: float = 0.05
    delta: float = 0.0
    baths: Dict[str, BathSpec] = field(default_factory=default_baths)

    @property
    def omega_w(self) -> float:
        return self.omega_h - self.omega_c - self.delta

    def with_omega_c(self, omega_c: float) -> "AbsorptionWireParams":
        return replace(self, omega_c=omega_c)

    def validate(self) -> None:
        if not self.omega_c > 0 or not self.omega_h > 0:
            raise ModelError("absorption_wire: ω_c and ω_h must be positive")
        if not self.omega_w > 0:
            raise ModelError(f"absorption_wire: ω_w = ω_h - ω_c - Δ must be positive, got {self.omega_w}")
        if not self.g > 0:
            raise ModelError("secular approximation invalid: g must be positive")
        require_baths(self.baths, ("c", "h", "w"), "absorption_wire")

    def validity_warnings(self) -> List[str]:
        """Regime checks for γ << g << ω_c."""
        warnings = []
        gamma = max(b.coupling for b in self.baths.values())
        if gamma / self.g > GAMMA_OVER_G_LIMIT:
            warnings.append(f"γ/g = {gamma / self.g:.3g} exceeds {GAMMA_OVER_G_LIMIT}: rates comparable to the coupling")
        if self.g / self.omega_c > G_OVER_OMEGA_C_LIMIT:
            warnings.append(f"g/ω_c = {self.g / self.omega_c:.3g} exceeds {G_OVER_OMEGA_C_LIMIT}: weak-coupling regime left")
        return warnings


def mixing_coefficients(g: float, delta: float) -> Dict[str, float]:
    """
    Squared mixing amplitudes of the hybridized states 4 and 5.

    c_± = (-Δ ± s) d_± / (4 g s), c'_± = d_± / (2 s), with s = (Δ² + 4g²)^½
    and d_± = (4g² + (Δ ± s)²)^½.

    Args:
        g: Device-wire coupling
        delta: Detuning Δ

    Returns:
        Dict with s, d_plus, d_minus and the squared coefficients
    """
    s = math.hypot(delta, 2.0 * g)
    # s - Δ and s + Δ without cancellation
    if delta >= 0:
        s_plus_delta = s + delta
        s_minus_delta = 4.0 * g * g / s_plus_delta
    else:
        s_minus_delta = s - delta
        s_plus_delta = 4.0 * g * g / s_minus_delta

    d_plus = math.sqrt(4.0 * g * g + s_plus_delta ** 2)
    d_minus = math.sqrt(4.0 * g * g + s_minus_delta ** 2)

    c_plus = s_minus_delta * d_plus / (4.0 * g * s)
    c_minus = -s_plus_delta * d_minus / (4.0 * g * s)
    cp_plus = d_plus / (2.0 * s)
    cp_minus = d_minus / (2.0 * s)

    return {
        "s": s,
        "d_plus": d_plus,
        "d_minus": d_minus,
        "c_plus": c_plus,
        "c_minus": c_minus,
        "c_plus_sq": c_plus * c_plus,
        "c_minus_sq": c_minus * c_minus,
        "cp_plus_sq": cp_plus * cp_plus,
        "cp_minus_sq": cp_minus * cp_minus,
        "one": 1.0,
    }


def eigenfrequencies(params: AbsorptionWireParams) -> Tuple[float, ...]:
    """ω_1..ω_6 of the device plus wire Hamiltonian."""
    s = math.hypot(params.delta, 2.0 * params.g)
    omega_w = params.omega_w
    return (
        0.0,
        omega_w,
        params.omega_c,
        (2.0 * params.omega_h - params.delta - s) / 2.0,
        (2.0 * params.omega_h - params.delta + s) / 2.0,
        omega_w + params.omega_h,
    )


def build_absorption_wire(params: AbsorptionWireParams) -> ModelBuild:
    """
    Rate graph of the wire-coupled absorption refrigerator.

    Six eigenstates and eleven transitions. Each edge quantum is the
    eigenfrequency difference of its endpoints, its rates are Bose rates of
    its bath scaled by the squared mixing coefficient.

    Args:
        params: Model parameters

    Returns:
        ModelBuild(graph, coefficients, warnings)

    Raises:
        ModelError: Invalid parameters or a degenerate spectrum
    """
    params.validate()
    omegas = eigenfrequencies(params)
    if omegas[4] - omegas[3] < 1e-12:
        raise ModelError("secular approximation invalid: ω_4 and ω_5 coincide")

    weights = mixing_coefficients(params.g, params.delta)

    edges = []
    couplings = {}
    for edge_id, (i, j, bath_label, weight_key) in enumerate(EDGE_TABLE, start=1):
        quantum = omegas[j - 1] - omegas[i - 1]
        weight = weights[weight_key]
        edges.append(transition_edge(edge_id, i, j, params.baths[bath_label], quantum, weight))
        couplings[(bath_label, i, j)] = weight

    graph = RateGraph(
        vertices=tuple(Vertex(k + 1, w) for k, w in enumerate(omegas)),
        edges=tuple(edges),
        baths=dict(params.baths),
    )
    coefficients = DerivedCoefficients(
        eigenfrequencies=omegas,
        coefficients={k: v for k, v in weights.items() if k != "one"},
        couplings=couplings,
    )
    return ModelBuild(graph, coefficients, tuple(params.validity_warnings()))
