"""
Eigen Crosscheck - Models
Numeric diagonalization of the 6x6 product-basis Hamiltonians against the analytic tables
"""

from dataclasses import dataclass, field
from typing import Dict, List, Tuple, Union

import numpy as np

from .absorption_wire import AbsorptionWireParams, build_absorption_wire
from .driven_wire import DrivenWireParams, build_driven_wire
from ..utils.errors import CrosscheckError
from ..utils.logger import get_logger

logger = get_logger(__name__)

FREQUENCY_TOLERANCE = 1e-12
COUPLING_TOLERANCE = 1e-10
CLUSTER_TOLERANCE = 1e-9


def _index(device: int, wire: int) -> int:
    """Product basis index of |device D, wire W>, both 1-based."""
    return (device - 1) * 2 + (wire - 1)


def _ket_bra(row: int, col: int) -> np.ndarray:
    op = np.zeros((6, 6))
    op[row, col] = 1.0
    return op


def lowering_operators() -> Dict[str, np.ndarray]:
    """S^c_- = |1D><2D| ⊗ 1, S^h_- = |1D><3D| ⊗ 1, S^w_- = 1 ⊗ |1W><2W|."""
    s_c = sum(_ket_bra(_index(1, w), _index(2, w)) for w in (1, 2))
    s_h = sum(_ket_bra(_index(1, w), _index(3, w)) for w in (1, 2))
    s_w = sum(_ket_bra(_index(d, 1), _index(d, 2)) for d in (1, 2, 3))
    return {"c": s_c, "h": s_h, "w": s_w}


def absorption_hamiltonian(params: AbsorptionWireParams) -> np.ndarray:
    """Device plus wire Hamiltonian with the exchange coupling g between 3D1W and 2D2W."""
    device_levels = (0.0, params.omega_c, params.omega_h)
    wire_levels = (0.0, params.omega_w)
    hamiltonian = np.zeros((6, 6))
    for d in (1, 2, 3):
        for w in (1, 2):
            hamiltonian[_index(d, w), _index(d, w)] = device_levels[d - 1] + wire_levels[w - 1]
    a, b = _index(3, 1), _index(2, 2)
    hamiltonian[a, b] = hamiltonian[b, a] = params.g
    return hamiltonian


def driven_hamiltonian(params: DrivenWireParams) -> np.ndarray:
    """Rotating-frame Hamiltonian: exchange g plus field coupling λ on the wire."""
    hamiltonian = np.zeros((6, 6))
    a, b = _index(3, 1), _index(2, 2)
    hamiltonian[a, b] = hamiltonian[b, a] = params.g
    for d in (1, 2, 3):
        a, b = _index(d, 2), _index(d, 1)
        hamiltonian[a, b] = hamiltonian[b, a] = params.lam
    return hamiltonian


@dataclass
class CrosscheckReport:
    """Deviation of the analytic spectrum and couplings from numeric diagonalization."""

    model: str
    max_frequency_deviation: float
    max_coupling_deviation: float
    compared_couplings: int
    mismatches: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.mismatches


def _clusters(values: Tuple[float, ...]) -> List[List[int]]:
    """Group 0-based labels whose values coincide within CLUSTER_TOLERANCE."""
    order = sorted(range(len(values)), key=lambda k: values[k])
    groups: List[List[int]] = []
    for k in order:
        if groups and abs(values[k] - values[groups[-1][-1]]) <= CLUSTER_TOLERANCE:
            groups[-1].append(k)
        else:
            groups.append([k])
    return groups


def eigen_crosscheck(
    params: Union[AbsorptionWireParams, DrivenWireParams],
    raise_on_failure: bool = True,
) -> CrosscheckReport:
    """
    Compare analytic eigenfrequencies and |<i|S^α_-|j>|² with numpy.linalg.eigh.

    Degenerate levels are compared through sums over the degenerate cluster,
    which do not depend on the basis chosen inside it.

    Args:
        params: Absorption or driven wire parameters
        raise_on_failure: Raise CrosscheckError on any mismatch

    Returns:
        CrosscheckReport

    Raises:
        CrosscheckError: On mismatch when raise_on_failure is set
    """
    if isinstance(params, AbsorptionWireParams):
        model = "absorption_wire"
        build = build_absorption_wire(params)
        hamiltonian = absorption_hamiltonian(params)
        baths = ("c", "h", "w")
    elif isinstance(params, DrivenWireParams):
        model = "driven_wire"
        build = build_driven_wire(params)
        hamiltonian = driven_hamiltonian(params)
        baths = ("c", "h")
    else:
        raise TypeError(f"no Hamiltonian for {type(params).__name__}")

    analytic = build.coefficients
    values, vectors = np.linalg.eigh(hamiltonian)
    omegas = analytic.eigenfrequencies

    mismatches = []
    freq_dev = float(np.max(np.abs(np.sort(np.array(omegas)) - values)))
    if freq_dev > FREQUENCY_TOLERANCE:
        mismatches.append(f"eigenfrequencies deviate by {freq_dev:.3g}")

    clusters = _clusters(omegas)
    # numeric eigenvector k belongs to the cluster of the analytic level nearest to it
    assignment = [min(range(len(clusters)), key=lambda c: min(abs(omegas[i] - v) for i in clusters[c]))
                  for v in values]
    numeric_members = [[k for k, c in enumerate(assignment) if c == ci] for ci in range(len(clusters))]
    if any(len(n) != len(a) for n, a in zip(numeric_members, clusters)):
        mismatches.append("numeric degeneracy structure differs from analytic spectrum")

    operators = lowering_operators()
    coupling_dev = 0.0
    compared = 0
    for bath in baths:
        elements = np.abs(vectors.T @ operators[bath] @ vectors) ** 2
        table = np.zeros((6, 6))
        for (label, i, j), weight in analytic.couplings.items():
            if label == bath:
                table[i - 1, j - 1] = table[j - 1, i - 1] = weight
        # S_- lowers, so only one ordering of each pair is populated; compare symmetrized sums
        numeric = elements + elements.T
        for a_index, a_members in enumerate(clusters):
            for b_index, b_members in enumerate(clusters):
                if b_index <= a_index:
                    continue
                expected = sum(table[i, j] for i in a_members for j in b_members)
                found = sum(numeric[k, l] for k in numeric_members[a_index] for l in numeric_members[b_index])
                deviation = abs(expected - found)
                coupling_dev = max(coupling_dev, deviation)
                compared += 1
                if deviation > COUPLING_TOLERANCE:
                    labels = ([i + 1 for i in a_members], [j + 1 for j in b_members])
                    mismatches.append(f"bath {bath} levels {labels}: analytic {expected:.12g}, numeric {found:.12g}")

    report = CrosscheckReport(model, freq_dev, coupling_dev, compared, mismatches)
    if report.passed:
        logger.info(f"Eigen crosscheck passed for {model}: Δω = {freq_dev:.2e}, Δ|c|² = {coupling_dev:.2e}")
    elif raise_on_failure:
        raise CrosscheckError(f"{model} analytic tables disagree: {'; '.join(mismatches)}")
    else:
        logger.warning(f"Eigen crosscheck failed for {model}: {len(mismatches)} mismatches")
    return report
