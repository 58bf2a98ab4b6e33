"""
Steady State - Circuit Thermo
Stationary populations, normalization determinant and direct steady-state currents
"""

from dataclasses import dataclass, field
from typing import Dict, Iterable, Optional

import numpy as np
from scipy.linalg import expm, lu_factor, lu_solve

from ..graph_core.rate_graph import RateGraph, rate_matrix
from ..utils.errors import SteadyStateError
from ..utils.logger import get_logger

logger = get_logger(__name__)

COLUMN_SUM_TOLERANCE = 1e-12
SINGULARITY_TOLERANCE = 1e-13


@dataclass(eq=False)
class SteadyState:
    """
    Stationary solution of dp/dt = W p.

    Currents are filled by analyze_steady_state; steady_state alone leaves them empty.
    """

    populations: np.ndarray
    normalization: float
    rate_matrix: np.ndarray
    per_bath_currents: Dict[str, float] = field(default_factory=dict)
    edge_currents: Dict[int, float] = field(default_factory=dict)
    power: Optional[float] = None
    entropy_rate: Optional[float] = None

    @property
    def D(self) -> float:
        return self.normalization


def lu_determinant(matrix: np.ndarray) -> float:
    """
    Determinant from an LU factorization with partial pivoting.

    Args:
        matrix: Square matrix; a 0x0 matrix has determinant 1

    Returns:
        det(matrix)
    """
    if matrix.size == 0:
        return 1.0
    lu, piv = lu_factor(matrix, check_finite=True)
    swaps = int(np.count_nonzero(piv != np.arange(len(piv))))
    sign = -1.0 if swaps % 2 else 1.0
    return sign * float(np.prod(np.diag(lu)))


def normalization_matrix(W: np.ndarray, row: int = 0) -> np.ndarray:
    """W with one row replaced by ones."""
    replaced = np.array(W, dtype=float, copy=True)
    replaced[row, :] = 1.0
    return replaced


def minor_determinant(W: np.ndarray, removed: Iterable[int]) -> float:
    """
    det(-W|C): determinant of -W with the rows and columns of the removed states deleted.

    Args:
        W: Rate matrix
        removed: 1-based state labels to remove

    Returns:
        Determinant, 1.0 when nothing remains
    """
    drop = {v - 1 for v in removed}
    keep = [k for k in range(W.shape[0]) if k not in drop]
    return lu_determinant(-W[np.ix_(keep, keep)])


def _rate_scale(W: np.ndarray) -> float:
    return float(np.max(np.abs(W))) if W.size else 0.0


def steady_state(W: np.ndarray, row: int = 0) -> SteadyState:
    """
    Solve W p = 0 with Σp = 1 by replacing one row of W with ones.

    Args:
        W: Rate matrix (columns sum to zero, irreducible)
        row: Index of the row replaced by ones

    Returns:
        SteadyState with populations and D = |det W̃|

    Raises:
        SteadyStateError: Column sums off, reducible/singular matrix or nonpositive populations
    """
    W = np.asarray(W, dtype=float)
    n = W.shape[0]
    scale = _rate_scale(W)
    if n == 0 or scale == 0.0:
        raise SteadyStateError("empty or zero rate matrix")

    column_error = float(np.max(np.abs(W.sum(axis=0))))
    if column_error > COLUMN_SUM_TOLERANCE * scale:
        raise SteadyStateError(f"rate matrix columns do not sum to zero (max {column_error:.3g})")

    replaced = normalization_matrix(W, row)
    lu, piv = lu_factor(replaced)
    diagonal = np.diag(lu)
    swaps = int(np.count_nonzero(piv != np.arange(n)))
    determinant = (-1.0 if swaps % 2 else 1.0) * float(np.prod(diagonal))
    normalization = abs(determinant)

    if not np.all(np.isfinite(diagonal)) or normalization <= SINGULARITY_TOLERANCE * scale ** (n - 1):
        raise SteadyStateError("rate matrix is reducible: normalization determinant vanishes")

    rhs = np.zeros(n)
    rhs[row] = 1.0
    populations = lu_solve((lu, piv), rhs)

    if np.any(populations <= 0):
        raise SteadyStateError(f"nonpositive steady-state population: {populations}")

    return SteadyState(populations=populations, normalization=normalization, rate_matrix=W)


def relaxed_populations(W: np.ndarray, squarings: int = 64) -> np.ndarray:
    """
    Long-time populations by repeated squaring of exp(W δt).

    δt is the inverse of the fastest exit rate; columns are renormalized after
    each squaring to keep the propagator stochastic.

    Args:
        W: Rate matrix
        squarings: Number of squarings; total time is δt·2^squarings

    Returns:
        Populations reached from the uniform distribution
    """
    W = np.asarray(W, dtype=float)
    dt = 1.0 / float(np.max(np.abs(np.diag(W))))
    propagator = expm(W * dt)
    for _ in range(squarings):
        propagator = propagator @ propagator
        propagator /= propagator.sum(axis=0, keepdims=True)
    n = W.shape[0]
    return propagator @ np.full(n, 1.0 / n)


def direct_currents(graph: RateGraph, populations: np.ndarray) -> Dict[str, object]:
    """
    Edge and bath currents straight from the populations.

    J_e = rate_up·p_tail − rate_down·p_head and Q̇_α = Σ_{e∈α} Ω_e J_e.

    Args:
        graph: Rate graph
        populations: Steady-state populations indexed by state label − 1

    Returns:
        Dict with 'edges' (id -> J_e), 'heat' (bath -> Q̇_α) and 'gross' (bath -> Σ|Ω_e J_e|)
    """
    edge_currents = {}
    heat = {label: 0.0 for label in graph.thermal_baths()}
    gross = {label: 0.0 for label in graph.thermal_baths()}
    for edge in graph.edges:
        current = edge.rate_up * populations[edge.tail - 1] - edge.rate_down * populations[edge.head - 1]
        edge_currents[edge.id] = current
        heat[edge.bath] += edge.quantum * current
        gross[edge.bath] += abs(edge.quantum * current)
    return {"edges": edge_currents, "heat": heat, "gross": gross}


def analyze_steady_state(graph: RateGraph, row: int = 0) -> SteadyState:
    """
    Steady state of a graph with its direct currents, power and entropy rate.

    Power is −Σ_α Q̇_α when the graph has a work source, otherwise None.
    Entropy production is −Σ_α Q̇_α / T_α over thermal baths.

    Args:
        graph: Valid rate graph
        row: Row replaced by ones in the normalization matrix

    Returns:
        Fully populated SteadyState
    """
    W, _ = rate_matrix(graph)
    state = steady_state(W, row)
    currents = direct_currents(graph, state.populations)

    state.per_bath_currents = currents["heat"]
    state.edge_currents = currents["edges"]
    thermal = graph.thermal_baths()
    state.entropy_rate = -sum(q / thermal[label].temperature for label, q in state.per_bath_currents.items())
    if graph.has_work_source():
        state.power = -sum(state.per_bath_currents.values())

    logger.debug(
        f"Steady state: D = {state.normalization:.6g}, currents = "
        + ", ".join(f"{k}: {v:.6g}" for k, v in state.per_bath_currents.items())
    )
    return state
