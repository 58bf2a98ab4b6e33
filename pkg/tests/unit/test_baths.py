"""
Tests for bath descriptions and bosonic rates
"""

import math
from decimal import Decimal, getcontext

import pytest

from src.models.baths import BathSpec, bose_rate
from src.utils.errors import ModelError


def decimal_emission(omega, temperature, coupling, dimension):
    getcontext().prec = 50
    x = Decimal(omega) / Decimal(temperature)
    return Decimal(coupling) * Decimal(omega) ** dimension / (1 - (-x).exp())


@pytest.mark.parametrize("omega, temperature", [
    (0.7, 9.0),
    (1e-4, 20.0),
    (0.01, 9.0),
    (3.0, 0.1),
])
def test_emission_against_high_precision(omega, temperature):
    bath = BathSpec("c", temperature=temperature, dimension=3, coupling=1e-6)
    emission, absorption = bose_rate(omega, bath)
    expected = float(decimal_emission(omega, temperature, 1e-6, 3))
    assert emission == pytest.approx(expected, rel=1e-14)
    assert absorption / emission == pytest.approx(math.exp(-omega / temperature), rel=1e-15)


def test_low_temperature_limit():
    bath = BathSpec("h", temperature=1e-3, dimension=1, coupling=2.0)
    emission, absorption = bose_rate(1.0, bath)
    assert emission == pytest.approx(2.0, rel=1e-15)
    assert absorption < 1e-300


def test_dimension_scales_rate():
    low = bose_rate(0.5, BathSpec("c", temperature=1.0, dimension=1))[0]
    high = bose_rate(0.5, BathSpec("c", temperature=1.0, dimension=3))[0]
    assert high / low == pytest.approx(0.25, rel=1e-14)


@pytest.mark.parametrize("omega", [0.0, -0.2, math.nan])
def test_nonpositive_frequency(omega):
    with pytest.raises(ModelError):
        bose_rate(omega, BathSpec("c", temperature=1.0))


def test_work_source_has_no_rate():
    with pytest.raises(ModelError, match="not thermal"):
        bose_rate(0.5, BathSpec.work_source())


class TestBathSpec:
    @pytest.mark.parametrize("kwargs", [
        {"temperature": 0.0},
        {"temperature": -1.0},
        {"temperature": math.inf},
        {"temperature": 1.0, "coupling": 0.0},
        {"temperature": 1.0, "dimension": 0},
        {"temperature": 1.0, "dimension": 1.5},
        {"temperature": 1.0, "kind": "reservoir"},
    ])
    def test_invalid(self, kwargs):
        with pytest.raises(ModelError):
            BathSpec("c", **kwargs)

    def test_to_dict(self):
        assert BathSpec("c", temperature=9.0).to_dict() == {"temperature": 9.0, "dimension": 3, "coupling": 1e-6}
        assert BathSpec.work_source().to_dict() == {"kind": "work_source"}

    def test_work_source_needs_no_temperature(self):
        source = BathSpec.work_source("w")
        assert source.kind == "work_source"
        assert source.temperature is None
