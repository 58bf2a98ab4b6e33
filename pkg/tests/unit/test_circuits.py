"""
Tests for maximal trees, fundamental circuits and complete enumeration
"""

from collections import Counter
from dataclasses import replace

import pytest

from src.circuit_thermo.cycle_analysis import HEAT_LEAK, TRICYCLE, TRIVIAL, classify
from src.graph_core.circuits import (
    Circuit,
    Cycle,
    canonicalize,
    circuit_from_edges,
    enumerate_circuits,
    enumerate_circuits_oracle,
    fundamental_circuits,
    spanning_tree_and_chords,
)
from src.graph_core.rate_graph import Vertex
from src.utils.errors import GraphValidationError


def census(circuits, graph):
    counts = Counter()
    for circuit in circuits:
        counts[(len(circuit), classify(circuit, graph))] += 1
    return counts


class TestCanonicalForm:
    def test_rotation_and_direction(self):
        assert canonicalize((3, 1, 2), (5, 6, 7)) == Circuit((1, 3, 2), (5, 7, 6))

    def test_already_canonical(self):
        assert canonicalize((1, 3, 4), (2, 8, 3)) == Circuit((1, 3, 4), (2, 8, 3))

    def test_two_edge_circuit(self):
        assert canonicalize((4, 1), (9, 2)) == Circuit((1, 4), (2, 9))

    def test_mismatched_lengths(self):
        with pytest.raises(ValueError):
            canonicalize((1, 2, 3), (1, 2))

    def test_label(self, absorption_graph):
        circuit = Circuit((1, 3, 4), (2, 8, 3))
        assert circuit.label() == "1-3-4"
        assert circuit.label(absorption_graph) == "1-3-4[cwh]"


class TestCircuitFromEdges:
    def test_triangle(self, absorption_graph):
        assert circuit_from_edges({3, 8, 2}, absorption_graph) == Circuit((1, 3, 4), (2, 8, 3))

    def test_open_path(self, absorption_graph):
        assert circuit_from_edges({2, 8}, absorption_graph) is None

    def test_two_disjoint_triangles(self, absorption_graph):
        # 1-3-4 and 2-5-6 share no vertex
        assert circuit_from_edges({2, 8, 3, 6, 11, 7}, absorption_graph) is None

    def test_single_edge(self, absorption_graph):
        assert circuit_from_edges({1}, absorption_graph) is None


class TestMaximalTree:
    @pytest.mark.parametrize("name, chords", [
        ("absorption_wire", 6),
        ("driven_wire", 11),
        ("appendix_three_level", 2),
        ("direct_three_level", 1),
    ])
    def test_chord_count(self, all_graphs, name, chords):
        graph = all_graphs[name]
        tree = spanning_tree_and_chords(graph)
        assert len(tree.tree_edge_ids) == graph.size - 1
        assert len(tree.chord_edge_ids) == chords
        assert tree.tree_edge_ids.isdisjoint(tree.chord_edge_ids)

    def test_absorption_tree_is_breadth_first_from_vertex_one(self, absorption_graph):
        tree = spanning_tree_and_chords(absorption_graph)
        # edges 1..4 reach 2, 3, 4, 5 from vertex 1; edge 7 reaches 6 from 2
        assert tree.tree_edge_ids == frozenset({1, 2, 3, 4, 7})

    def test_fundamental_circuits_contain_their_chord(self, driven_graph):
        tree = spanning_tree_and_chords(driven_graph)
        circuits = fundamental_circuits(driven_graph, tree)
        assert len(circuits) == len(tree.chord_edge_ids)
        for chord, circuit in zip(sorted(tree.chord_edge_ids), circuits):
            assert chord in circuit.edge_set
            assert len(circuit.edge_set & tree.chord_edge_ids) == 1

    def test_disconnected_graph(self, direct_graph):
        graph = replace(direct_graph, vertices=direct_graph.vertices + (Vertex(4, 3.0),))
        with pytest.raises(GraphValidationError):
            spanning_tree_and_chords(graph)


class TestEnumeration:
    def test_absorption_census(self, absorption_graph, absorption_circuits):
        assert len(absorption_circuits) == 38
        assert census(absorption_circuits, absorption_graph) == Counter({
            (3, TRICYCLE): 6,
            (4, HEAT_LEAK): 10,
            (4, TRIVIAL): 1,
            (5, TRICYCLE): 14,
            (6, TRICYCLE): 2,
            (6, HEAT_LEAK): 5,
        })

    def test_driven_census(self, driven_graph, driven_circuits):
        assert len(driven_circuits) == 104
        assert census(driven_circuits, driven_graph) == Counter({
            (2, TRICYCLE): 8,
            (4, TRIVIAL): 12,
            (4, TRICYCLE): 60,
            (4, HEAT_LEAK): 24,
        })

    def test_three_level_models(self, appendix_graph, direct_graph):
        appendix = enumerate_circuits(appendix_graph)
        assert [c.vertex_seq for c in appendix] == [(1, 2), (1, 3)]
        assert [c.edge_ids for c in appendix] == [(1, 2), (3, 4)]
        assert enumerate_circuits(direct_graph) == [Circuit((1, 2, 3), (1, 3, 2))]

    def test_oracle_agrees_on_all_models(self, all_graphs):
        for name, graph in all_graphs.items():
            assert enumerate_circuits(graph) == enumerate_circuits_oracle(graph), name

    def test_sorted_and_unique(self, driven_circuits):
        keys = [(len(c), c.vertex_seq, c.edge_ids) for c in driven_circuits]
        assert keys == sorted(keys)
        assert len(set(driven_circuits)) == len(driven_circuits)

    def test_named_absorption_circuits(self, absorption_circuits):
        by_vertices = {c.vertex_seq: c for c in absorption_circuits}
        assert by_vertices[(1, 3, 4)].edge_ids == (2, 8, 3)
        assert by_vertices[(1, 4, 6, 5)].edge_ids == (3, 10, 11, 4)
        assert (1, 4, 6, 2, 5) in by_vertices

    def test_parallel_edges_make_two_edge_circuits(self, driven_circuits):
        two_edge = [c for c in driven_circuits if len(c) == 2]
        assert {c.vertex_seq for c in two_edge} == {(i, j) for i in (1, 2) for j in (3, 4, 5, 6)}


class TestCycle:
    def test_orientation_validation(self):
        with pytest.raises(ValueError):
            Cycle(Circuit((1, 2), (1, 2)), 0)

    def test_directions(self, absorption_graph):
        cycle = Cycle(Circuit((1, 3, 4), (2, 8, 3)), 1)
        assert [(e.id, s) for e, s in cycle.directions(absorption_graph)] == [(2, 1), (8, 1), (3, -1)]
        backwards = cycle.reversed().directions(absorption_graph)
        assert [(e.id, s) for e, s in backwards] == [(2, -1), (8, -1), (3, 1)]
