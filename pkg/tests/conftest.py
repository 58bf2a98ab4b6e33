"""
Shared fixtures: default models, their circuit sets and the full-range sweeps
"""

import numpy as np
import pytest

from src.analysis.sweep import SweepSpec, sweep
from src.graph_core.circuits import enumerate_circuits
from src.models.absorption_wire import AbsorptionWireParams, build_absorption_wire
from src.models.driven_wire import DrivenWireParams, build_driven_wire
from src.models.three_level import (
    AppendixThreeLevelParams,
    DirectThreeLevelParams,
    build_appendix_three_level,
    build_direct_three_level,
)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture(scope="session")
def absorption_params():
    return AbsorptionWireParams()


@pytest.fixture(scope="session")
def driven_params():
    return DrivenWireParams()


@pytest.fixture(scope="session")
def absorption_graph(absorption_params):
    return build_absorption_wire(absorption_params).graph


@pytest.fixture(scope="session")
def driven_graph(driven_params):
    return build_driven_wire(driven_params).graph


@pytest.fixture(scope="session")
def appendix_graph():
    return build_appendix_three_level(AppendixThreeLevelParams()).graph


@pytest.fixture(scope="session")
def direct_graph():
    return build_direct_three_level(DirectThreeLevelParams()).graph


@pytest.fixture(scope="session")
def all_graphs(absorption_graph, driven_graph, appendix_graph, direct_graph):
    return {
        "absorption_wire": absorption_graph,
        "driven_wire": driven_graph,
        "appendix_three_level": appendix_graph,
        "direct_three_level": direct_graph,
    }


@pytest.fixture(scope="session")
def absorption_circuits(absorption_graph):
    return enumerate_circuits(absorption_graph)


@pytest.fixture(scope="session")
def driven_circuits(driven_graph):
    return enumerate_circuits(driven_graph)


@pytest.fixture(scope="session")
def absorption_sweep(absorption_params):
    spec = SweepSpec(absorption_params, 0.06, 0.94, 200, frozenset({"totals", "circuits", "representatives"}))
    return sweep(spec)


@pytest.fixture(scope="session")
def direct_sweep():
    return sweep(SweepSpec(DirectThreeLevelParams(), 0.06, 0.94, 200))


@pytest.fixture(scope="session")
def driven_sweep(driven_params):
    return sweep(SweepSpec(driven_params, 0.35, 0.99, 200, frozenset({"totals", "representatives"})))
