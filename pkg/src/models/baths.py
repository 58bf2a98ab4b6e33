"""
Baths - Models
Bath descriptions and the bosonic transition-rate function
"""

import math
from dataclasses import dataclass
from typing import Optional, Tuple

from ..utils.errors import ModelError

THERMAL = "thermal"
WORK_SOURCE = "work_source"


@dataclass(frozen=True)
class BathSpec:
    """
    A reservoir coupled to the device.

    Thermal baths carry a temperature, spectral dimension d and coupling γ.
    A work source (classical driving field) has no temperature and owns no edges.
    """

    label: str
    temperature: Optional[float] = None
    dimension: int = 3
    coupling: float = 1e-6
    kind: str = THERMAL

    def __post_init__(self):
        if self.kind not in (THERMAL, WORK_SOURCE):
            raise ModelError(f"bath {self.label}: unknown kind '{self.kind}'")
        if self.kind == THERMAL:
            if self.temperature is None or not math.isfinite(self.temperature) or self.temperature <= 0:
                raise ModelError(f"bath {self.label}: temperature must be finite and positive")
            if self.coupling <= 0:
                raise ModelError(f"bath {self.label}: coupling must be positive")
            if int(self.dimension) != self.dimension or self.dimension < 1:
                raise ModelError(f"bath {self.label}: dimension must be a positive integer")

    @classmethod
    def work_source(cls, label: str = "w") -> "BathSpec":
        return cls(label=label, temperature=None, dimension=0, coupling=0.0, kind=WORK_SOURCE)

    def to_dict(self) -> dict:
        if self.kind == WORK_SOURCE:
            return {"kind": WORK_SOURCE}
        return {"temperature": self.temperature, "dimension": self.dimension, "coupling": self.coupling}


def bose_rate(omega: float, bath: BathSpec) -> Tuple[float, float]:
    """
    Emission and absorption rates of a bosonic bath at frequency ω.

    Γ_ω = γ ω^d [N(ω) + 1] and Γ_-ω = Γ_ω exp(-ω/T), with N the Bose occupation.

    Args:
        omega: Transition frequency, must be positive
        bath: Thermal bath

    Returns:
        Tuple (Γ_ω, Γ_-ω)

    Raises:
        ModelError: For ω <= 0 or a non-thermal bath
    """
    if not omega > 0:
        raise ModelError(f"bose_rate needs a positive frequency, got {omega}")
    if bath.kind != THERMAL:
        raise ModelError(f"bath {bath.label} is not thermal")

    x = omega / bath.temperature
    # N + 1 = 1 / (1 - e^{-x}); stays finite as T -> 0
    occupation_plus_one = 1.0 / -math.expm1(-x)
    emission = bath.coupling * omega ** bath.dimension * occupation_plus_one
    return emission, emission * math.exp(-x)
