"""
Graph Core Module
Rate multigraphs, validation and simple-circuit enumeration
"""

from .circuits import (
    Circuit,
    Cycle,
    MaximalTree,
    canonicalize,
    circuit_from_edges,
    enumerate_circuits,
    enumerate_circuits_oracle,
    fundamental_circuits,
    spanning_tree_and_chords,
)
from .rate_graph import Edge, RateGraph, ValidationReport, Vertex, rate_matrix, validate_graph

__all__ = [
    'Vertex', 'Edge', 'RateGraph', 'ValidationReport', 'validate_graph', 'rate_matrix',
    'Circuit', 'Cycle', 'MaximalTree', 'canonicalize', 'circuit_from_edges',
    'spanning_tree_and_chords', 'fundamental_circuits', 'enumerate_circuits',
    'enumerate_circuits_oracle',
]
