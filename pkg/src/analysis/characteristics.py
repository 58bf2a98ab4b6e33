"""
Characteristics - Analysis
Figure of merit against normalized useful flux over an operating window
"""

from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from .performance import ENGINE, REFRIGERATOR, carnot_bounds, figure_of_merit, operating_mode
from .sweep import SweepResult
from ..utils.errors import ModelError

SOURCES = ("total", "representatives")


@dataclass
class PerformanceCharacteristic:
    """Closed merit/flux curve of one operating mode."""

    mode: str
    source: str
    omega_c: np.ndarray
    merit: np.ndarray
    flux: np.ndarray
    normalized_flux: np.ndarray
    carnot: float

    @property
    def max_merit(self) -> float:
        return float(np.max(self.merit))

    @property
    def endpoint_merits(self) -> Tuple[float, float]:
        return float(self.merit[0]), float(self.merit[-1])

    @property
    def merit_at_max_flux(self) -> float:
        return float(self.merit[int(np.argmax(self.flux))])


def _currents(point, source: str, driven: bool):
    if source == "total":
        return point.heat, point.power
    if not point.representative_heat:
        raise ModelError("sweep has no representative currents; request the 'representatives' output")
    heat = dict(point.representative_heat)
    if driven:
        return heat, point.representative_power
    return heat, None


def performance_characteristic(
    result: SweepResult, mode: str = REFRIGERATOR, source: str = "total"
) -> PerformanceCharacteristic:
    """
    Trace (merit, normalized flux) over the points of a sweep in a given mode.

    Refrigerator: ε against Q̇_c / max Q̇_c. Engine: η against P / min P.
    With source='representatives' the mode and merit are recomputed from the
    representative currents.

    Args:
        result: Sweep result
        mode: 'refrigerator' or 'engine'
        source: 'total' or 'representatives'

    Returns:
        PerformanceCharacteristic ordered by ω_c

    Raises:
        ModelError: Unknown mode or source, or no point of the sweep in that mode
    """
    if mode not in (REFRIGERATOR, ENGINE):
        raise ModelError(f"characteristic needs mode refrigerator or engine, got '{mode}'")
    if source not in SOURCES:
        raise ModelError(f"unknown characteristic source '{source}'")
    driven = result.driven
    if mode == ENGINE and not driven:
        raise ModelError("absorption devices have no engine mode")

    rows = []
    for point in result.successful():
        heat, power = _currents(point, source, driven)
        if "w" not in heat and not driven:
            continue
        if operating_mode(heat, power, driven) != mode:
            continue
        merit, _ = figure_of_merit(heat, power, mode, driven)
        flux = heat["c"] if mode == REFRIGERATOR else -power
        rows.append((point.omega_c, merit, flux))

    if not rows:
        raise ModelError(f"no {mode} points in the sweep ({source} currents)")

    omega_c, merit, flux = (np.array(col, dtype=float) for col in zip(*rows))
    bounds = carnot_bounds(result.spec.params)
    carnot: Optional[float] = bounds["cop"] if mode == REFRIGERATOR else bounds["efficiency"]
    return PerformanceCharacteristic(
        mode=mode,
        source=source,
        omega_c=omega_c,
        merit=merit,
        flux=flux,
        normalized_flux=flux / np.max(flux),
        carnot=carnot,
    )
