"""
Driven Wire - Models
Three-level device whose wire is driven resonantly by a classical field
"""

import math
from dataclasses import dataclass, field, replace
from typing import Dict, List, Tuple

from .base import DerivedCoefficients, ModelBuild, require_baths, transition_edge
from .baths import BathSpec
from ..graph_core.rate_graph import RateGraph, Vertex
from ..utils.errors import ModelError

LOWER_STATES = (1, 2)
UPPER_STATES = (3, 4, 5, 6)


def default_baths() -> Dict[str, BathSpec]:
    return {
        "c": BathSpec("c", temperature=9.0),
        "h": BathSpec("h", temperature=10.0),
        "w": BathSpec.work_source("w"),
    }


@dataclass(frozen=True)
class DrivenWireParams:
    """
    Device frequencies, wire coupling g and field coupling λ.

    The field is resonant with the wire: ω_w = ω_h - ω_c.
    """

    omega_c: float = 0.8
    omega_h: float = 1.0
    g: float = 0.25
    lam: float = 0.05
    baths: Dict[str, BathSpec] = field(default_factory=default_baths)

    @property
    def omega_w(self) -> float:
        return self.omega_h - self.omega_c

    def with_omega_c(self, omega_c: float) -> "DrivenWireParams":
        return replace(self, omega_c=omega_c)

    def validate(self) -> None:
        if not self.omega_c > 0 or not self.omega_h > self.omega_c:
            raise ModelError("driven_wire: need 0 < ω_c < ω_h")
        if not self.g > 0 or not self.lam > 0:
            raise ModelError("driven_wire: g and λ must be positive")
        require_baths(self.baths, ("c", "h"), "driven_wire")

    def validity_warnings(self) -> List[str]:
        warnings = []
        gamma = max(b.coupling for b in self.baths.values() if b.kind == "thermal")
        if gamma / min(self.g, self.lam) > 0.1:
            warnings.append("bath couplings are not small against g and λ")
        return warnings


def eigenfrequencies(g: float, lam: float) -> Tuple[float, ...]:
    """ω_1..ω_6 of the rotating-frame Hamiltonian."""
    r = math.sqrt(4.0 * lam * lam + g * g)
    return (-lam, lam, -(g + r) / 2.0, (g - r) / 2.0, (r - g) / 2.0, (g + r) / 2.0)


def mixing_coefficients(g: float, lam: float) -> Dict[str, float]:
    """
    u_± = 2λ / (g ± r) and the eight squared weights |c_ij|², i in {1,2}, j in {3..6}.

    Args:
        g: Device-wire coupling
        lam: Field coupling λ

    Returns:
        Dict with r, u_plus, u_minus and keys 'c13'...'c26'
    """
    r = math.sqrt(4.0 * lam * lam + g * g)
    u_plus = 2.0 * lam / (g + r)
    u_minus = 2.0 * lam / (g - r)

    norm_minus = 4.0 * (1.0 + u_minus * u_minus)
    norm_plus = 4.0 * (1.0 + u_plus * u_plus)
    a = (1.0 - u_minus) ** 2 / norm_minus
    b = (1.0 + u_minus) ** 2 / norm_minus
    c = (1.0 + u_plus) ** 2 / norm_plus
    d = (1.0 - u_plus) ** 2 / norm_plus

    return {
        "r": r,
        "u_plus": u_plus,
        "u_minus": u_minus,
        "c13": a, "c26": a,
        "c23": b, "c16": b,
        "c14": c, "c25": c,
        "c24": d, "c15": d,
    }


def build_driven_wire(params: DrivenWireParams) -> ModelBuild:
    """
    Rate graph of the driven wire machine.

    States 1 and 2 couple only to 3..6; each pair carries a cold edge with
    quantum ω_c + ω_ij and a hot edge with quantum ω_h + ω_ij, ω_ij = ω_j - ω_i.

    Args:
        params: Model parameters

    Returns:
        ModelBuild(graph, coefficients, warnings); the graph's baths include
        the work source 'w' without edges

    Raises:
        ModelError: Invalid parameters or a nonpositive quantum
    """
    params.validate()
    omegas = eigenfrequencies(params.g, params.lam)
    weights = mixing_coefficients(params.g, params.lam)
    device = {"c": params.omega_c, "h": params.omega_h}

    edges = []
    couplings = {}
    edge_id = 1
    for i in LOWER_STATES:
        for j in UPPER_STATES:
            weight = weights[f"c{i}{j}"]
            for bath_label in ("c", "h"):
                quantum = device[bath_label] + omegas[j - 1] - omegas[i - 1]
                if quantum <= 0:
                    raise ModelError(
                        f"driven_wire: quantum ω_{bath_label} + ω_{i}{j} = {quantum:.6g} is not positive"
                    )
                edges.append(transition_edge(edge_id, i, j, params.baths[bath_label], quantum, weight))
                couplings[(bath_label, i, j)] = weight
                edge_id += 1

    baths = dict(params.baths)
    baths.setdefault("w", BathSpec.work_source("w"))
    graph = RateGraph(
        vertices=tuple(Vertex(k + 1, w) for k, w in enumerate(omegas)),
        edges=tuple(edges),
        baths=baths,
    )
    coefficients = DerivedCoefficients(
        eigenfrequencies=omegas,
        coefficients={k: v for k, v in weights.items()},
        couplings=couplings,
    )
    return ModelBuild(graph, coefficients, tuple(params.validity_warnings()))
