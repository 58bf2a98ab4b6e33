"""
Circuit Thermo Module
Steady states, cycle fluxes and the circuit decomposition of heat, work and entropy
"""

from .cycle_analysis import (
    HEAT_LEAK,
    TRICYCLE,
    TRIVIAL,
    Affinities,
    CircuitReport,
    affinity,
    algebraic_values,
    circuit_currents,
    circuit_flux,
    circuit_reports,
    classify,
)
from .reconciliation import TotalsReport, total_currents
from .steady_state import (
    SteadyState,
    analyze_steady_state,
    direct_currents,
    lu_determinant,
    minor_determinant,
    normalization_matrix,
    relaxed_populations,
    steady_state,
)

__all__ = [
    'SteadyState', 'steady_state', 'analyze_steady_state', 'direct_currents',
    'relaxed_populations', 'lu_determinant', 'minor_determinant', 'normalization_matrix',
    'Affinities', 'CircuitReport', 'algebraic_values', 'affinity', 'circuit_flux',
    'circuit_currents', 'circuit_reports', 'classify', 'TRIVIAL', 'HEAT_LEAK', 'TRICYCLE',
    'TotalsReport', 'total_currents',
]
