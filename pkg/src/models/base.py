"""
Model Base - Models
Shared pieces of the device builders: build result and transition edges
"""

from dataclasses import dataclass, field
from typing import Dict, Mapping, NamedTuple, Optional, Tuple

from .baths import BathSpec, bose_rate
from ..graph_core.rate_graph import Edge, RateGraph
from ..utils.errors import ModelError

DEGENERACY_TOLERANCE = 1e-12


@dataclass(frozen=True)
class DerivedCoefficients:
    """
    Analytic spectrum and transition weights of a model.

    couplings maps (bath, i, j) with i < j to |<i|S^bath_-|j>|^2.
    """

    eigenfrequencies: Tuple[float, ...]
    coefficients: Dict[str, float] = field(default_factory=dict)
    couplings: Dict[Tuple[str, int, int], float] = field(default_factory=dict)


class ModelBuild(NamedTuple):
    graph: RateGraph
    coefficients: Optional[DerivedCoefficients]
    warnings: Tuple[str, ...] = ()


def transition_edge(
    edge_id: int,
    i: int,
    j: int,
    bath: BathSpec,
    quantum: float,
    weight: float = 1.0,
) -> Edge:
    """
    Edge for a transition i -> j absorbing `quantum` from the bath.

    A negative quantum means j lies below i; the edge is then flipped so the
    tail is the lower level and the stored quantum is positive.

    Args:
        edge_id: Unique edge id
        i: Lower index of the vertex pair
        j: Upper index of the vertex pair
        bath: Thermal bath owning the transition
        quantum: Energy absorbed from the bath on i -> j
        weight: Squared matrix element scaling both rates

    Returns:
        Edge with KMS-consistent rates

    Raises:
        ModelError: When the quantum vanishes (degenerate transition)
    """
    if abs(quantum) < DEGENERACY_TOLERANCE:
        raise ModelError(
            f"secular approximation invalid: degenerate transition {i}-{j} on bath {bath.label}"
        )
    if weight <= 0:
        raise ModelError(f"transition {i}-{j} on bath {bath.label} has vanishing weight")

    tail, head = (i, j) if quantum > 0 else (j, i)
    omega = abs(quantum)
    emission, absorption = bose_rate(omega, bath)
    return Edge(
        id=edge_id,
        tail=tail,
        head=head,
        bath=bath.label,
        quantum=omega,
        rate_up=weight * absorption,
        rate_down=weight * emission,
    )


def require_baths(baths: Mapping[str, BathSpec], labels: Tuple[str, ...], model: str) -> None:
    """Check that every thermal bath a model needs is present."""
    for label in labels:
        bath = baths.get(label)
        if bath is None:
            raise ModelError(f"{model}: missing bath '{label}'")
        if bath.kind != "thermal":
            raise ModelError(f"{model}: bath '{label}' must be thermal")
