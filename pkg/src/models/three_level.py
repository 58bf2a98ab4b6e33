"""
Three-Level Devices - Models
Baselines without the wire: directly driven device and directly coupled absorption device
"""

from dataclasses import dataclass, field, replace
from typing import Dict, List

from .base import ModelBuild, require_baths, transition_edge
from .baths import BathSpec
from ..graph_core.rate_graph import RateGraph, Vertex
from ..utils.errors import ModelError


def _driven_baths() -> Dict[str, BathSpec]:
    return {
        "c": BathSpec("c", temperature=9.0),
        "h": BathSpec("h", temperature=10.0),
        "w": BathSpec.work_source("w"),
    }


def _absorption_baths() -> Dict[str, BathSpec]:
    return {
        "c": BathSpec("c", temperature=9.0),
        "h": BathSpec("h", temperature=10.0),
        "w": BathSpec("w", temperature=20.0),
    }


@dataclass(frozen=True)
class AppendixThreeLevelParams:
    """Three-level device driven directly by a resonant field of strength λ."""

    omega_c: float = 0.5
    omega_h: float = 1.0
    lam: float = 0.05
    baths: Dict[str, BathSpec] = field(default_factory=_driven_baths)

    def with_omega_c(self, omega_c: float) -> "AppendixThreeLevelParams":
        return replace(self, omega_c=omega_c)

    def validate(self) -> None:
        if not 0 < self.omega_c < self.omega_h:
            raise ModelError("appendix_three_level: need 0 < ω_c < ω_h")
        if not self.lam > 0:
            raise ModelError("appendix_three_level: λ must be positive")
        if self.lam >= self.omega_c:
            raise ModelError(f"appendix_three_level: λ = {self.lam} must be below ω_c = {self.omega_c}")
        require_baths(self.baths, ("c", "h"), "appendix_three_level")

    def validity_warnings(self) -> List[str]:
        return []


@dataclass(frozen=True)
class DirectThreeLevelParams:
    """Three-level absorption device coupled directly to cold, hot and work baths."""

    omega_c: float = 0.7
    omega_h: float = 1.0
    baths: Dict[str, BathSpec] = field(default_factory=_absorption_baths)

    @property
    def omega_w(self) -> float:
        return self.omega_h - self.omega_c

    def with_omega_c(self, omega_c: float) -> "DirectThreeLevelParams":
        return replace(self, omega_c=omega_c)

    def validate(self) -> None:
        if not 0 < self.omega_c < self.omega_h:
            raise ModelError("direct_three_level: need 0 < ω_c < ω_h")
        require_baths(self.baths, ("c", "h", "w"), "direct_three_level")

    def validity_warnings(self) -> List[str]:
        return []


def build_appendix_three_level(params: AppendixThreeLevelParams) -> ModelBuild:
    """
    Dressed three-level device: ground state 1 and the field-split pair 2 (−λ), 3 (+λ).

    Pairs (1,2) and (1,3) each carry a cold and a hot edge with quanta ω_α ∓ λ
    and rates Γ^α/2; states 2 and 3 are not coupled.

    Args:
        params: Model parameters

    Returns:
        ModelBuild with no derived coefficient table
    """
    params.validate()
    device = {"c": params.omega_c, "h": params.omega_h}

    edges = []
    edge_id = 1
    for j, shift in ((2, -params.lam), (3, params.lam)):
        for bath_label in ("c", "h"):
            quantum = device[bath_label] + shift
            edges.append(transition_edge(edge_id, 1, j, params.baths[bath_label], quantum, 0.5))
            edge_id += 1

    baths = dict(params.baths)
    baths.setdefault("w", BathSpec.work_source("w"))
    graph = RateGraph(
        vertices=(Vertex(1, 0.0), Vertex(2, -params.lam), Vertex(3, params.lam)),
        edges=tuple(edges),
        baths=baths,
    )
    return ModelBuild(graph, None, ())


def build_direct_three_level(params: DirectThreeLevelParams) -> ModelBuild:
    """
    Triangle 1-2 (cold, ω_c), 1-3 (hot, ω_h), 2-3 (work, ω_h − ω_c) with unit weights.

    Args:
        params: Model parameters

    Returns:
        ModelBuild with no derived coefficient table
    """
    params.validate()
    baths = params.baths
    edges = (
        transition_edge(1, 1, 2, baths["c"], params.omega_c),
        transition_edge(2, 1, 3, baths["h"], params.omega_h),
        transition_edge(3, 2, 3, baths["w"], params.omega_w),
    )
    graph = RateGraph(
        vertices=(Vertex(1, 0.0), Vertex(2, params.omega_c), Vertex(3, params.omega_h)),
        edges=edges,
        baths=dict(baths),
    )
    return ModelBuild(graph, None, ())
