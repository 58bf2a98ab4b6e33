"""
Circuits - Graph Core
Maximal tree, chords and complete simple-circuit enumeration of a rate multigraph
"""

from collections import deque
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

from .rate_graph import Edge, RateGraph
from ..utils.errors import GraphValidationError
from ..utils.logger import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True, order=True)
class Circuit:
    """
    Simple closed path in canonical form.

    edge_ids[k] joins vertex_seq[k] to vertex_seq[(k + 1) % len]. The sequence
    starts at the lowest vertex and runs in the direction whose first edge has
    the smaller id.
    """

    vertex_seq: Tuple[int, ...]
    edge_ids: Tuple[int, ...]

    def __len__(self) -> int:
        return len(self.edge_ids)

    @property
    def edge_set(self) -> FrozenSet[int]:
        return frozenset(self.edge_ids)

    @property
    def vertex_set(self) -> FrozenSet[int]:
        return frozenset(self.vertex_seq)

    def label(self, graph: Optional[RateGraph] = None) -> str:
        """Readable label such as '1-3-4' or '1-3[ch]' when baths are needed."""
        path = "-".join(str(v) for v in self.vertex_seq)
        if graph is None:
            return path
        edges = graph.edge_map()
        return f"{path}[{''.join(edges[e].bath for e in self.edge_ids)}]"


@dataclass(frozen=True)
class Cycle:
    """Circuit with an orientation: +1 follows vertex_seq, -1 runs it backwards."""

    circuit: Circuit
    orientation: int = 1

    def __post_init__(self):
        if self.orientation not in (1, -1):
            raise ValueError(f"orientation must be +1 or -1, got {self.orientation}")

    def reversed(self) -> "Cycle":
        return Cycle(self.circuit, -self.orientation)

    def directions(self, graph: RateGraph) -> List[Tuple[Edge, int]]:
        """
        Edges in canonical circuit order with their traversal sign.

        Sign is +1 when the edge is traversed tail -> head (absorption).
        The order does not depend on orientation.
        """
        edges = graph.edge_map()
        seq = self.circuit.vertex_seq
        n = len(seq)
        result = []
        for k, edge_id in enumerate(self.circuit.edge_ids):
            edge = edges[edge_id]
            start = seq[k] if self.orientation == 1 else seq[(k + 1) % n]
            result.append((edge, 1 if start == edge.tail else -1))
        return result


@dataclass(frozen=True)
class MaximalTree:
    """Spanning tree edge ids and the remaining chord ids."""

    tree_edge_ids: FrozenSet[int]
    chord_edge_ids: FrozenSet[int]


def canonicalize(vertex_seq: Sequence[int], edge_ids: Sequence[int]) -> Circuit:
    """
    Put a closed walk description into canonical circuit form.

    Args:
        vertex_seq: Vertices in traversal order (first vertex not repeated)
        edge_ids: Edge ids, edge_ids[k] joining vertex_seq[k] and vertex_seq[k+1]

    Returns:
        Canonical Circuit
    """
    n = len(vertex_seq)
    if n != len(edge_ids) or n < 2:
        raise ValueError("a circuit needs equally many vertices and edges, at least two")

    start = min(range(n), key=lambda k: vertex_seq[k])
    fwd_vertices = tuple(vertex_seq[(start + k) % n] for k in range(n))
    fwd_edges = tuple(edge_ids[(start + k) % n] for k in range(n))

    # backwards from the same start: vertices v0, v_{n-1}, ...; edges e_{n-1}, e_{n-2}, ...
    bwd_vertices = (fwd_vertices[0],) + tuple(reversed(fwd_vertices[1:]))
    bwd_edges = tuple(reversed(fwd_edges))

    if bwd_edges[0] < fwd_edges[0]:
        return Circuit(bwd_vertices, bwd_edges)
    return Circuit(fwd_vertices, fwd_edges)


def circuit_from_edges(edge_ids: Iterable[int], graph: RateGraph) -> Optional[Circuit]:
    """
    Build the circuit formed by a set of edges.

    Args:
        edge_ids: Edge ids of a candidate subgraph
        graph: Owning graph

    Returns:
        Canonical Circuit if the edges form exactly one simple closed path, else None
    """
    ids = set(edge_ids)
    if len(ids) < 2:
        return None

    edges = graph.edge_map()
    incident: Dict[int, List[int]] = {}
    for edge_id in ids:
        edge = edges[edge_id]
        incident.setdefault(edge.tail, []).append(edge_id)
        incident.setdefault(edge.head, []).append(edge_id)

    if any(len(eids) != 2 for eids in incident.values()):
        return None

    start = min(incident)
    vertex_seq = [start]
    edge_seq = []
    current, previous_edge = start, None
    while True:
        a, b = incident[current]
        next_edge = a if a != previous_edge else b
        edge_seq.append(next_edge)
        current = edges[next_edge].other(current)
        previous_edge = next_edge
        if current == start:
            break
        vertex_seq.append(current)

    if len(edge_seq) != len(ids):
        # several disjoint circuits
        return None
    return canonicalize(vertex_seq, edge_seq)


def spanning_tree_and_chords(graph: RateGraph) -> MaximalTree:
    """
    Breadth-first maximal tree grown from vertex 1, scanning edges by ascending id.

    Args:
        graph: Connected rate graph

    Returns:
        MaximalTree with |V|-1 tree edges and |E|-|V|+1 chords

    Raises:
        GraphValidationError: If the graph is disconnected
    """
    adjacency: Dict[int, List[Edge]] = {v.index: [] for v in graph.vertices}
    for edge in sorted(graph.edges, key=lambda e: e.id):
        adjacency[edge.tail].append(edge)
        adjacency[edge.head].append(edge)

    root = min(adjacency)
    visited = {root}
    tree: Set[int] = set()
    queue = deque([root])
    while queue:
        vertex = queue.popleft()
        for edge in adjacency[vertex]:
            neighbour = edge.other(vertex)
            if neighbour not in visited:
                visited.add(neighbour)
                tree.add(edge.id)
                queue.append(neighbour)

    if len(visited) != len(adjacency):
        raise GraphValidationError("graph is disconnected", [f"unreachable vertices {sorted(set(adjacency) - visited)}"])

    chords = frozenset(e.id for e in graph.edges) - tree
    return MaximalTree(frozenset(tree), chords)


def fundamental_circuits(graph: RateGraph, tree: Optional[MaximalTree] = None) -> List[Circuit]:
    """
    One circuit per chord: the chord plus the tree path between its endpoints.

    Args:
        graph: Connected rate graph
        tree: Maximal tree; built with spanning_tree_and_chords when omitted

    Returns:
        Fundamental circuits ordered by chord id
    """
    tree = tree or spanning_tree_and_chords(graph)
    edges = graph.edge_map()

    tree_adjacency: Dict[int, List[Edge]] = {v.index: [] for v in graph.vertices}
    for edge_id in sorted(tree.tree_edge_ids):
        edge = edges[edge_id]
        tree_adjacency[edge.tail].append(edge)
        tree_adjacency[edge.head].append(edge)

    root = min(tree_adjacency)
    parent: Dict[int, Tuple[int, int]] = {}
    depth = {root: 0}
    queue = deque([root])
    while queue:
        vertex = queue.popleft()
        for edge in tree_adjacency[vertex]:
            neighbour = edge.other(vertex)
            if neighbour not in depth:
                depth[neighbour] = depth[vertex] + 1
                parent[neighbour] = (vertex, edge.id)
                queue.append(neighbour)

    circuits = []
    for chord_id in sorted(tree.chord_edge_ids):
        chord = edges[chord_id]
        u, v = chord.tail, chord.head
        path: Set[int] = set()
        while u != v:
            if depth[u] >= depth[v]:
                u, edge_id = parent[u]
            else:
                v, edge_id = parent[v]
            path.add(edge_id)
        circuit = circuit_from_edges(path | {chord_id}, graph)
        if circuit is None:
            raise GraphValidationError(f"chord {chord_id} does not close a simple circuit")
        circuits.append(circuit)

    return circuits


def enumerate_circuits(graph: RateGraph) -> List[Circuit]:
    """
    Complete set of simple circuits from the fundamental set.

    Every non-empty combination of fundamental circuits is formed by symmetric
    difference of their edge sets; combinations that collapse to one simple
    closed path are kept.

    Args:
        graph: Connected rate graph

    Returns:
        Deduplicated canonical circuits, sorted by length then vertex and edge sequence
    """
    tree = spanning_tree_and_chords(graph)
    basis = [c.edge_set for c in fundamental_circuits(graph, tree)]
    m = len(basis)
    logger.debug(f"Fundamental set: {m} chords, {2 ** m - 1} combinations")

    found: Set[Circuit] = set()
    combined: List[FrozenSet[int]] = [frozenset()] * (1 << m)
    for mask in range(1, 1 << m):
        low = (mask & -mask).bit_length() - 1
        combined[mask] = combined[mask & (mask - 1)] ^ basis[low]
        circuit = circuit_from_edges(combined[mask], graph)
        if circuit is not None:
            found.add(circuit)

    circuits = sorted(found, key=_sort_key)
    logger.debug(f"Enumerated {len(circuits)} simple circuits")
    return circuits


def enumerate_circuits_oracle(graph: RateGraph) -> List[Circuit]:
    """
    Backtracking enumeration of simple circuits in the undirected multigraph.

    For each start vertex s in ascending order, simple paths are grown through
    vertices larger than s; an unused edge back to s closes a circuit. Each
    circuit is met once per direction and deduplicated by canonical form.

    Args:
        graph: Connected rate graph

    Returns:
        Canonical circuits, same ordering as enumerate_circuits
    """
    adjacency: Dict[int, List[Edge]] = {v.index: [] for v in graph.vertices}
    for edge in sorted(graph.edges, key=lambda e: e.id):
        adjacency[edge.tail].append(edge)
        adjacency[edge.head].append(edge)

    found: Set[Circuit] = set()

    for start in sorted(adjacency):
        vertex_path = [start]
        edge_path: List[int] = []
        on_path = {start}

        def extend(vertex: int) -> None:
            for edge in adjacency[vertex]:
                if edge.id in edge_path:
                    continue
                neighbour = edge.other(vertex)
                if neighbour == start:
                    if edge_path:
                        found.add(canonicalize(vertex_path, edge_path + [edge.id]))
                elif neighbour > start and neighbour not in on_path:
                    vertex_path.append(neighbour)
                    edge_path.append(edge.id)
                    on_path.add(neighbour)
                    extend(neighbour)
                    on_path.discard(neighbour)
                    edge_path.pop()
                    vertex_path.pop()

        extend(start)

    return sorted(found, key=_sort_key)


def _sort_key(circuit: Circuit) -> Tuple[int, Tuple[int, ...], Tuple[int, ...]]:
    return len(circuit), circuit.vertex_seq, circuit.edge_ids
