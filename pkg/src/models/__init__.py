"""
Models Module
Concrete devices as rate graphs: wire-coupled machines and three-level baselines
"""

from .absorption_wire import AbsorptionWireParams, build_absorption_wire
from .base import DerivedCoefficients, ModelBuild, transition_edge
from .baths import BathSpec, bose_rate
from .crosscheck import CrosscheckReport, eigen_crosscheck
from .driven_wire import DrivenWireParams, build_driven_wire
from .registry import MODELS, ModelSpec, build_model, get_model, model_name_for
from .three_level import (
    AppendixThreeLevelParams,
    DirectThreeLevelParams,
    build_appendix_three_level,
    build_direct_three_level,
)

__all__ = [
    'BathSpec', 'bose_rate', 'DerivedCoefficients', 'ModelBuild', 'transition_edge',
    'AbsorptionWireParams', 'build_absorption_wire',
    'DrivenWireParams', 'build_driven_wire',
    'AppendixThreeLevelParams', 'build_appendix_three_level',
    'DirectThreeLevelParams', 'build_direct_three_level',
    'CrosscheckReport', 'eigen_crosscheck',
    'MODELS', 'ModelSpec', 'get_model', 'model_name_for', 'build_model',
]
