"""
Model Registry - Models
Name-based access to parameter classes, builders, defaults and sweep ranges
"""

from dataclasses import dataclass
from typing import Callable, Dict, Tuple, Type

from .absorption_wire import AbsorptionWireParams, build_absorption_wire
from .base import ModelBuild
from .driven_wire import DrivenWireParams, build_driven_wire
from .three_level import (
    AppendixThreeLevelParams,
    DirectThreeLevelParams,
    build_appendix_three_level,
    build_direct_three_level,
)
from ..utils.errors import ModelError


@dataclass(frozen=True)
class ModelSpec:
    """Everything the analysis and CLI layers need to know about one model."""

    name: str
    params_cls: Type
    builder: Callable[..., ModelBuild]
    driven: bool
    sweep_range: Tuple[float, float]
    thermal_baths: Tuple[str, ...]
    scalar_fields: Tuple[str, ...]


MODELS: Dict[str, ModelSpec] = {
    "absorption_wire": ModelSpec(
        name="absorption_wire",
        params_cls=AbsorptionWireParams,
        builder=build_absorption_wire,
        driven=False,
        sweep_range=(0.06, 0.94),
        thermal_baths=("c", "h", "w"),
        scalar_fields=("omega_c", "omega_h", "g", "delta"),
    ),
    "driven_wire": ModelSpec(
        name="driven_wire",
        params_cls=DrivenWireParams,
        builder=build_driven_wire,
        driven=True,
        sweep_range=(0.35, 0.99),
        thermal_baths=("c", "h"),
        scalar_fields=("omega_c", "omega_h", "g", "lam"),
    ),
    "appendix_three_level": ModelSpec(
        name="appendix_three_level",
        params_cls=AppendixThreeLevelParams,
        builder=build_appendix_three_level,
        driven=True,
        sweep_range=(0.1, 0.99),
        thermal_baths=("c", "h"),
        scalar_fields=("omega_c", "omega_h", "lam"),
    ),
    "direct_three_level": ModelSpec(
        name="direct_three_level",
        params_cls=DirectThreeLevelParams,
        builder=build_direct_three_level,
        driven=False,
        sweep_range=(0.05, 0.95),
        thermal_baths=("c", "h", "w"),
        scalar_fields=("omega_c", "omega_h"),
    ),
}


def get_model(name: str) -> ModelSpec:
    """
    Look up a model by name.

    Raises:
        ModelError: For an unknown name
    """
    try:
        return MODELS[name]
    except KeyError:
        raise ModelError(f"unknown model '{name}'")


def model_name_for(params) -> str:
    """Registry name of a parameter object."""
    for spec in MODELS.values():
        if isinstance(params, spec.params_cls):
            return spec.name
    raise ModelError(f"no model registered for {type(params).__name__}")


def build_model(params) -> ModelBuild:
    """Build the rate graph for any registered parameter object."""
    return MODELS[model_name_for(params)].builder(params)
