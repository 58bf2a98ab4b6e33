"""
Analysis Module
Operating points, sweeps, representatives, window limits and performance characteristics
"""

from .breakdown import group_contributions, rank_circuits
from .characteristics import PerformanceCharacteristic, performance_characteristic
from .limits import (
    CircuitLimit,
    CoolingWindowReport,
    DrivenLimitsReport,
    cooling_window_bounds,
    dissipation_halfwidth,
    global_reversal_frequency,
    limit_frequencies_driven,
    reversal_frequency,
)
from .performance import (
    DISSIPATOR,
    ENGINE,
    FAILED,
    REFRIGERATOR,
    PerformancePoint,
    PointEvaluation,
    PointEvaluator,
    carnot_bounds,
    evaluate_point,
    figure_of_merit,
    operating_mode,
)
from .representatives import RepresentativeSet, select_representatives
from .sweep import SweepResult, SweepRunner, SweepSpec, sweep, sweep_frame

__all__ = [
    'PerformancePoint', 'PointEvaluation', 'PointEvaluator', 'evaluate_point',
    'carnot_bounds', 'operating_mode', 'figure_of_merit',
    'REFRIGERATOR', 'ENGINE', 'DISSIPATOR', 'FAILED',
    'RepresentativeSet', 'select_representatives',
    'SweepSpec', 'SweepResult', 'SweepRunner', 'sweep', 'sweep_frame',
    'CircuitLimit', 'CoolingWindowReport', 'DrivenLimitsReport', 'cooling_window_bounds',
    'limit_frequencies_driven', 'dissipation_halfwidth', 'global_reversal_frequency',
    'reversal_frequency',
    'PerformanceCharacteristic', 'performance_characteristic',
    'group_contributions', 'rank_circuits',
]
