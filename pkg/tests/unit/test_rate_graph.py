"""
Tests for rate graph validation and rate matrix assembly
"""

import math
from dataclasses import replace

import numpy as np
import pytest

from src.graph_core.rate_graph import Edge, RateGraph, Vertex, rate_matrix, validate_graph
from src.models.base import transition_edge
from src.models.baths import BathSpec
from src.utils.errors import GraphValidationError


@pytest.fixture
def chain():
    """Three levels coupled in a line to one bath."""
    bath = BathSpec("c", temperature=2.0)
    edges = (
        transition_edge(1, 1, 2, bath, 0.4),
        transition_edge(2, 2, 3, bath, 0.7),
    )
    vertices = (Vertex(1, 0.0), Vertex(2, 0.4), Vertex(3, 1.1))
    return RateGraph(vertices, edges, {"c": bath})


class TestValidateGraph:
    def test_default_models_are_valid(self, all_graphs):
        for name, graph in all_graphs.items():
            report = validate_graph(graph)
            assert report.passed, f"{name}: {report.violations}"
            assert bool(report)

    def test_kms_violation_is_reported(self, chain):
        broken = replace(chain.edges[0], rate_up=chain.edges[0].rate_up * 1.01)
        graph = replace(chain, edges=(broken, chain.edges[1]))
        report = validate_graph(graph)
        assert not report.passed
        assert any("KMS" in v for v in report.violations)

    def test_disconnected_graph(self, chain):
        graph = replace(chain, vertices=chain.vertices + (Vertex(4, 2.0),))
        report = validate_graph(graph)
        assert "graph is disconnected" in report.violations

    def test_self_loop_and_unknown_bath(self, chain):
        loop = Edge(9, 2, 2, "c", 0.1, 1.0, math.exp(0.05))
        stranger = replace(chain.edges[1], id=10, bath="x")
        graph = replace(chain, edges=chain.edges + (loop, stranger))
        violations = validate_graph(graph).violations
        assert any("self-loop" in v for v in violations)
        assert any("unknown bath 'x'" in v for v in violations)

    def test_non_contiguous_indices(self, chain):
        graph = replace(chain, vertices=(Vertex(1, 0.0), Vertex(2, 0.4), Vertex(5, 1.1)))
        violations = validate_graph(graph).violations
        assert any("contiguous" in v for v in violations)

    def test_parallel_edges_are_allowed(self, driven_graph):
        pairs = [tuple(sorted(e.endpoints())) for e in driven_graph.edges]
        assert len(pairs) > len(set(pairs))
        assert validate_graph(driven_graph).passed


class TestRateMatrix:
    def test_columns_sum_to_zero(self, all_graphs):
        for graph in all_graphs.values():
            W, per_bath = rate_matrix(graph)
            scale = np.max(np.abs(W))
            assert np.all(np.abs(W.sum(axis=0)) <= 1e-12 * scale)
            assert np.allclose(sum(per_bath.values()), W, rtol=0, atol=1e-15 * scale)

    def test_off_diagonal_entries(self, chain):
        W, _ = rate_matrix(chain)
        up, down = chain.edges[0].rate_up, chain.edges[0].rate_down
        # W[i, j] is the rate from j to i
        assert W[1, 0] == up
        assert W[0, 1] == down
        assert W[2, 0] == 0.0
        assert np.all(np.diag(W) < 0)

    def test_invalid_graph_raises(self, chain):
        graph = replace(chain, vertices=chain.vertices + (Vertex(4, 2.0),))
        with pytest.raises(GraphValidationError) as excinfo:
            rate_matrix(graph)
        assert "graph is disconnected" in excinfo.value.violations

    def test_networkx_view(self, absorption_graph):
        view = absorption_graph.to_networkx()
        assert view.number_of_nodes() == 6
        assert view.number_of_edges() == 11
        assert view.has_edge(1, 3, key=2)
