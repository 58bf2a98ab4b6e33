"""
Tests for the device builders and their analytic coefficient tables
"""

import math

import pytest

from src.graph_core.rate_graph import validate_graph
from src.models.absorption_wire import (
    AbsorptionWireParams,
    build_absorption_wire,
    eigenfrequencies as absorption_eigenfrequencies,
    mixing_coefficients as absorption_mixing,
)
from src.models.baths import BathSpec
from src.models.driven_wire import (
    DrivenWireParams,
    build_driven_wire,
    eigenfrequencies as driven_eigenfrequencies,
    mixing_coefficients as driven_mixing,
)
from src.models.registry import MODELS, build_model, get_model, model_name_for
from src.models.three_level import (
    AppendixThreeLevelParams,
    DirectThreeLevelParams,
    build_appendix_three_level,
    build_direct_three_level,
)
from src.utils.errors import ModelError


class TestAbsorptionWire:
    def test_default_spectrum(self):
        omegas = absorption_eigenfrequencies(AbsorptionWireParams())
        assert omegas == pytest.approx((0.0, 0.3, 0.7, 0.95, 1.05, 1.3), abs=1e-15)

    def test_resonant_mixing_is_balanced(self):
        weights = absorption_mixing(0.05, 0.0)
        for key in ("c_plus_sq", "c_minus_sq", "cp_plus_sq", "cp_minus_sq"):
            assert weights[key] == pytest.approx(0.5, rel=1e-14)

    def test_coefficient_identities(self, rng):
        for _ in range(100):
            g = rng.uniform(1e-3, 0.2)
            delta = rng.uniform(-0.3, 0.3)
            w = absorption_mixing(g, delta)
            assert w["c_plus_sq"] + w["c_minus_sq"] == pytest.approx(1.0, abs=1e-12)
            assert w["cp_plus_sq"] + w["cp_minus_sq"] == pytest.approx(1.0, abs=1e-12)
            assert w["c_plus_sq"] == pytest.approx(w["cp_minus_sq"], abs=1e-12)
            assert w["c_minus_sq"] == pytest.approx(w["cp_plus_sq"], abs=1e-12)

    def test_detuned_limit(self):
        g, delta = 1e-3, 0.1
        w = absorption_mixing(g, delta)
        assert w["c_plus_sq"] <= 2 * (g / delta) ** 2
        assert w["cp_minus_sq"] <= 2 * (g / delta) ** 2
        assert w["cp_plus_sq"] == pytest.approx(1.0, abs=1e-3)

    def test_build(self, absorption_params):
        build = build_absorption_wire(absorption_params)
        graph = build.graph
        assert graph.size == 6
        assert len(graph.edges) == 11
        assert validate_graph(graph).passed
        assert build.warnings == ()
        assert graph.edge(2).bath == "c"
        assert graph.edge(2).quantum == pytest.approx(0.7)
        assert graph.edge(5).quantum == pytest.approx(0.7 - 0.05)
        assert build.coefficients.couplings[("h", 1, 4)] == pytest.approx(0.5)

    def test_detuned_build_keeps_kms(self):
        params = AbsorptionWireParams(delta=0.1, g=1e-3, baths={
            label: BathSpec(label, temperature=t, coupling=1e-8)
            for label, t in (("c", 9.0), ("h", 10.0), ("w", 20.0))
        })
        build = build_absorption_wire(params)
        assert validate_graph(build.graph).passed
        assert build.warnings == ()

    def test_cold_frequency_equal_to_coupling(self):
        with pytest.raises(ModelError, match="secular approximation invalid"):
            build_absorption_wire(AbsorptionWireParams(omega_c=0.05))

    @pytest.mark.parametrize("kwargs", [
        {"omega_c": 0.0},
        {"omega_c": 1.2},
        {"g": 0.0},
        {"delta": 0.5},
    ])
    def test_invalid_parameters(self, kwargs):
        with pytest.raises(ModelError):
            AbsorptionWireParams(**kwargs).validate()

    def test_missing_bath(self):
        params = AbsorptionWireParams(baths={"c": BathSpec("c", temperature=9.0)})
        with pytest.raises(ModelError, match="missing bath 'h'"):
            params.validate()

    def test_validity_warnings(self):
        strong = AbsorptionWireParams(omega_c=0.08)
        assert any("g/ω_c" in w for w in strong.validity_warnings())

        noisy = AbsorptionWireParams(baths={
            label: BathSpec(label, temperature=t, coupling=0.01)
            for label, t in (("c", 9.0), ("h", 10.0), ("w", 20.0))
        })
        assert any("γ/g" in w for w in build_absorption_wire(noisy).warnings)


class TestDrivenWire:
    def test_default_spectrum(self):
        r = math.sqrt(4 * 0.05 ** 2 + 0.25 ** 2)
        omegas = driven_eigenfrequencies(0.25, 0.05)
        assert r == pytest.approx(0.26926, abs=1e-5)
        assert omegas == pytest.approx((-0.05, 0.05, -0.25963, -0.00963, 0.00963, 0.25963), abs=1e-5)

    def test_coefficient_identities(self, rng):
        for _ in range(100):
            g = rng.uniform(1e-3, 1.0)
            lam = rng.uniform(1e-3, 0.5)
            w = driven_mixing(g, lam)
            assert w["u_plus"] * w["u_minus"] == pytest.approx(-1.0, abs=1e-12)
            for j in (3, 4, 5, 6):
                assert w[f"c1{j}"] + w[f"c2{j}"] == pytest.approx(0.5, abs=1e-12)
            for i in (1, 2):
                assert sum(w[f"c{i}{j}"] for j in (3, 4, 5, 6)) == pytest.approx(1.0, abs=1e-12)

    def test_build(self, driven_params):
        build = build_driven_wire(driven_params)
        graph = build.graph
        assert len(graph.edges) == 16
        assert graph.has_work_source()
        assert set(graph.thermal_baths()) == {"c", "h"}
        assert all(e.bath in ("c", "h") for e in graph.edges)
        # edge 1 is the cold edge of pair (1, 3): quantum ω_c + ω_3 − ω_1
        omegas = driven_eigenfrequencies(0.25, 0.05)
        assert graph.edge(1).quantum == pytest.approx(0.8 + omegas[2] - omegas[0])
        assert graph.edge(2).bath == "h"

    def test_nonpositive_quantum(self):
        with pytest.raises(ModelError, match="not positive"):
            build_driven_wire(DrivenWireParams(omega_c=0.2))

    @pytest.mark.parametrize("kwargs", [{"omega_c": 1.0}, {"g": 0.0}, {"lam": -0.1}])
    def test_invalid_parameters(self, kwargs):
        with pytest.raises(ModelError):
            DrivenWireParams(**kwargs).validate()


class TestThreeLevel:
    def test_appendix_graph(self):
        graph = build_appendix_three_level(AppendixThreeLevelParams()).graph
        assert [(e.tail, e.head, e.bath) for e in graph.edges] == [
            (1, 2, "c"), (1, 2, "h"), (1, 3, "c"), (1, 3, "h"),
        ]
        assert [e.quantum for e in graph.edges] == pytest.approx([0.45, 0.95, 0.55, 1.05])
        assert graph.has_work_source()

    def test_appendix_field_must_stay_below_cold_frequency(self):
        with pytest.raises(ModelError, match="below ω_c"):
            build_appendix_three_level(AppendixThreeLevelParams(omega_c=0.04))

    def test_direct_graph(self):
        graph = build_direct_three_level(DirectThreeLevelParams(omega_c=0.6)).graph
        assert [e.quantum for e in graph.edges] == pytest.approx([0.6, 1.0, 0.4])
        assert not graph.has_work_source()

    def test_direct_needs_ordered_frequencies(self):
        with pytest.raises(ModelError):
            build_direct_three_level(DirectThreeLevelParams(omega_c=1.0))


class TestRegistry:
    def test_lookup(self):
        assert get_model("driven_wire").driven
        assert not get_model("absorption_wire").driven
        with pytest.raises(ModelError, match="unknown model 'four_level'"):
            get_model("four_level")

    def test_every_model_builds_from_defaults(self):
        for name, spec in MODELS.items():
            params = spec.params_cls()
            assert model_name_for(params) == name
            assert validate_graph(build_model(params).graph).passed

    def test_sweep_ranges_contain_default(self):
        for spec in MODELS.values():
            lo, hi = spec.sweep_range
            assert lo < spec.params_cls().omega_c < hi
