"""
Tests for grouped and ranked circuit contributions
"""

import pytest

from src.analysis.breakdown import group_contributions, rank_circuits
from src.circuit_thermo.cycle_analysis import HEAT_LEAK, TRICYCLE, TRIVIAL, circuit_reports
from src.circuit_thermo.steady_state import analyze_steady_state
from src.graph_core.circuits import enumerate_circuits
from src.models.absorption_wire import AbsorptionWireParams, build_absorption_wire, default_baths
from src.models.baths import BathSpec


@pytest.fixture(scope="module")
def absorption_reports(absorption_graph, absorption_circuits):
    return circuit_reports(absorption_circuits, absorption_graph, analyze_steady_state(absorption_graph))


@pytest.fixture(scope="module")
def driven_reports(driven_graph, driven_circuits):
    return circuit_reports(driven_circuits, driven_graph, analyze_steady_state(driven_graph))


def test_absorption_groups(absorption_reports):
    groups = group_contributions(absorption_reports)
    assert list(groups) == [
        (HEAT_LEAK, 4), (HEAT_LEAK, 6), (TRICYCLE, 3), (TRICYCLE, 5), (TRICYCLE, 6), (TRIVIAL, 4),
    ]
    for bath in ("c", "h", "w"):
        total = sum(r.heat[bath] for r in absorption_reports)
        assert sum(g[bath] for g in groups.values()) == pytest.approx(total, rel=1e-12)
    assert "power" not in groups[(TRICYCLE, 3)]


def test_trivial_group_carries_no_heat(absorption_reports):
    trivial = group_contributions(absorption_reports)[(TRIVIAL, 4)]
    scale = max(abs(r.heat["c"]) for r in absorption_reports)
    assert all(abs(q) <= 1e-12 * scale for q in trivial.values())


def test_driven_groups_with_power(driven_reports):
    groups = group_contributions(driven_reports, with_power=True)
    assert set(groups) == {(TRICYCLE, 2), (TRICYCLE, 4), (HEAT_LEAK, 4), (TRIVIAL, 4)}
    total_power = sum(r.power for r in driven_reports)
    assert sum(g["power"] for g in groups.values()) == pytest.approx(total_power, rel=1e-12)
    scale = max(abs(r.power) for r in driven_reports)
    assert abs(groups[(HEAT_LEAK, 4)]["power"]) <= 1e-9 * scale


def test_rank_circuits(absorption_reports):
    top = rank_circuits(absorption_reports, "c", top=3)
    assert len(top) == 3
    magnitudes = [abs(r.heat["c"]) for r in top]
    assert magnitudes == sorted(magnitudes, reverse=True)
    largest = max(abs(r.heat["c"]) for r in absorption_reports)
    assert magnitudes[0] == largest


def test_rank_needs_positive_count(absorption_reports):
    with pytest.raises(ValueError):
        rank_circuits(absorption_reports, top=0)


def _pairs(seq):
    return frozenset(frozenset((seq[k], seq[(k + 1) % len(seq)])) for k in range(len(seq)))


@pytest.mark.parametrize("delta, omega_c", [(0.1, 0.5), (0.3, 0.5), (0.3, 0.3)])
def test_detuned_cold_ranking_is_led_by_tricycles(delta, omega_c):
    baths = {label: BathSpec(label, temperature=b.temperature, coupling=1e-8) for label, b in default_baths().items()}
    graph = build_absorption_wire(AbsorptionWireParams(omega_c=omega_c, g=1e-3, delta=delta, baths=baths)).graph
    reports = circuit_reports(enumerate_circuits(graph), graph, analyze_steady_state(graph))

    top = rank_circuits(reports, "c", top=3)
    assert all(r.circuit_class == TRICYCLE for r in top)

    named = {_pairs(seq) for seq in ((1, 2, 4, 3), (1, 5, 6, 2), (1, 3, 4, 2, 6, 5))}
    leaks = [r for r in reports if _pairs(r.circuit.vertex_seq) in named]
    assert len(leaks) == 3
    assert all(r.circuit_class == HEAT_LEAK for r in leaks)
    assert max(abs(r.heat["c"]) for r in leaks) <= 1e-3 * abs(top[0].heat["c"])
