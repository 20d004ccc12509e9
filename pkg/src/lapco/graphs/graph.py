# src/lapco/graphs/graph.py
import logging
from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Sequence, Tuple

import networkx as nx

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]


class GraphError(ValueError):
    """Invalid graph construction or graph-type precondition."""
    pass


class SelfLoopError(GraphError):
    pass


class DuplicateEdgeError(GraphError):
    pass


class VertexRangeError(GraphError):
    pass


class NotATreeError(GraphError):
    pass


@dataclass(frozen=True)
class Graph:
    """
    Immutable simple undirected graph on vertices 0..n-1.
    Build instances through make_graph(), which validates the edge list.
    """
    n: int
    edges: Tuple[Edge, ...]
    adjacency: Tuple[FrozenSet[int], ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def neighbors(self, v: int) -> FrozenSet[int]:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and v in self.adjacency[u]

    def leaves(self) -> List[int]:
        return [v for v in range(self.n) if len(self.adjacency[v]) == 1]

    def degrees(self) -> List[int]:
        return [len(nbrs) for nbrs in self.adjacency]

    def laplacian_rows(self) -> List[List[int]]:
        """Rows of L = D - A as Python integers."""
        rows = [[0] * self.n for _ in range(self.n)]
        for v in range(self.n):
            rows[v][v] = len(self.adjacency[v])
        for u, v in self.edges:
            rows[u][v] = -1
            rows[v][u] = -1
        return rows

    def relabel(self, permutation: Sequence[int]) -> 'Graph':
        """Returns the graph with vertex v renamed to permutation[v]."""
        if sorted(permutation) != list(range(self.n)):
            raise GraphError(f"Not a permutation of 0..{self.n - 1}: {list(permutation)}")
        return make_graph(self.n, [(permutation[u], permutation[v]) for u, v in self.edges])

    def with_edges(self, removed: Iterable[Edge] = (), added: Iterable[Edge] = ()) -> 'Graph':
        """Returns a new graph with `removed` deleted and `added` inserted."""
        drop = {_normalize(u, v) for u, v in removed}
        missing = drop.difference(self.edges)
        if missing:
            raise GraphError(f"Cannot remove absent edges: {sorted(missing)}")
        kept = [e for e in self.edges if e not in drop]
        return make_graph(self.n, kept + list(added))

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges)
        return g

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges)})"


def _normalize(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def make_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """
    Validates an edge list and builds a Graph.

    Raises:
        VertexRangeError: n < 1 or an endpoint outside 0..n-1.
        SelfLoopError: an edge (v, v).
        DuplicateEdgeError: the same unordered pair listed twice.
    """
    if n < 1:
        raise VertexRangeError(f"Vertex count must be positive, got {n}")
    seen = set()
    adjacency: List[set] = [set() for _ in range(n)]
    for edge in edges:
        u, v = int(edge[0]), int(edge[1])
        for endpoint in (u, v):
            if not 0 <= endpoint < n:
                raise VertexRangeError(f"Edge ({u}, {v}): endpoint {endpoint} outside 0..{n - 1}")
        if u == v:
            raise SelfLoopError(f"Self-loop at vertex {u}")
        key = _normalize(u, v)
        if key in seen:
            raise DuplicateEdgeError(f"Duplicate edge ({key[0]}, {key[1]})")
        seen.add(key)
        adjacency[u].add(v)
        adjacency[v].add(u)
    return Graph(n=n, edges=tuple(sorted(seen)), adjacency=tuple(frozenset(a) for a in adjacency))


def from_networkx(g: nx.Graph) -> Graph:
    """Builds a Graph from a networkx graph, relabelling nodes 0..n-1 in sorted order."""
    order = {node: i for i, node in enumerate(sorted(g.nodes))}
    return make_graph(len(order), [(order[a], order[b]) for a, b in g.edges])
