# src/lapco/graphs/structure.py
import logging
from collections import deque
from dataclasses import dataclass
from typing import Dict, List, Optional, Set, Tuple

import networkx as nx

from .graph import Graph, GraphError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class StructuralReport:
    connected: bool
    is_tree: bool
    is_unicyclic: bool
    girth: Optional[int]
    cycle_vertices: Tuple[int, ...]
    leaf_count: int


def classify(graph: Graph) -> StructuralReport:
    """Connectivity, tree/unicyclic flags, girth, the unique cycle and leaf count."""
    g = graph.to_networkx()
    connected = nx.is_connected(g)
    is_tree = connected and graph.m == graph.n - 1
    is_unicyclic = connected and graph.m == graph.n
    cycle: Tuple[int, ...] = ()
    girth: Optional[int] = None
    if is_unicyclic:
        cycle = _ordered_cycle(graph, set(nx.cycle_basis(g)[0]))
        girth = len(cycle)
    elif graph.m >= 3:
        lengths = [len(c) for c in nx.minimum_cycle_basis(g)]
        girth = min(lengths) if lengths else None
    return StructuralReport(
        connected=connected,
        is_tree=is_tree,
        is_unicyclic=is_unicyclic,
        girth=girth,
        cycle_vertices=cycle,
        leaf_count=len(graph.leaves()),
    )


def _ordered_cycle(graph: Graph, members: Set[int]) -> Tuple[int, ...]:
    # smallest label first, then towards its smaller cycle neighbour
    start = min(members)
    order = [start, min(w for w in graph.neighbors(start) if w in members)]
    while len(order) < len(members):
        order.append(next(w for w in graph.neighbors(order[-1]) if w in members and w != order[-2]))
    return tuple(order)


@dataclass(frozen=True)
class UnicyclicLayout:
    """A unicyclic graph seen as a cycle with rooted trees hanging off each cycle vertex."""
    cycle: Tuple[int, ...]
    root: Dict[int, int]
    parent: Dict[int, Optional[int]]
    depth: Dict[int, int]
    children: Dict[int, Tuple[int, ...]]

    @property
    def girth(self) -> int:
        return len(self.cycle)

    def tree(self, root: int) -> List[int]:
        """Vertices of the tree attached at cycle vertex `root`, root first, BFS order."""
        order = [root]
        for v in order:
            order.extend(self.children[v])
        return order

    def tree_size(self, root: int) -> int:
        return len(self.tree(root))

    def height(self, root: int) -> int:
        return max(self.depth[v] for v in self.tree(root))

    def nontrivial_roots(self) -> List[int]:
        return [r for r in self.cycle if self.children[r]]

    def branch_points(self, root: int) -> List[int]:
        """Vertices of the tree at `root` with at least two children."""
        return [v for v in self.tree(root) if len(self.children[v]) >= 2]


def unicyclic_layout(graph: Graph) -> UnicyclicLayout:
    report = classify(graph)
    if not report.is_unicyclic:
        raise GraphError(f"Graph is not unicyclic: {graph}")
    on_cycle = set(report.cycle_vertices)
    root: Dict[int, int] = {}
    parent: Dict[int, Optional[int]] = {}
    depth: Dict[int, int] = {}
    children: Dict[int, List[int]] = {v: [] for v in range(graph.n)}
    for r in report.cycle_vertices:
        root[r], parent[r], depth[r] = r, None, 0
        queue = deque([r])
        while queue:
            v = queue.popleft()
            for w in sorted(graph.neighbors(v)):
                if w in on_cycle or w in root:
                    continue
                root[w], parent[w], depth[w] = r, v, depth[v] + 1
                children[v].append(w)
                queue.append(w)
    return UnicyclicLayout(
        cycle=report.cycle_vertices,
        root=root,
        parent=parent,
        depth=depth,
        children={v: tuple(c) for v, c in children.items()},
    )


@dataclass(frozen=True)
class PendantPath:
    """Path anchor-v_1-...-v_k whose interior has degree 2 and whose end v_k is a leaf."""
    anchor: int
    vertices: Tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices)

    @property
    def leaf(self) -> int:
        return self.vertices[-1]

    @property
    def first(self) -> int:
        return self.vertices[0]


def pendant_path_from(graph: Graph, anchor: int, first: int) -> Optional[PendantPath]:
    """The pendant path leaving `anchor` through neighbour `first`, if that branch is one."""
    if not graph.has_edge(anchor, first):
        return None
    prev, cur = anchor, first
    walked = [first]
    while graph.degree(cur) == 2:
        nxt = next(w for w in graph.neighbors(cur) if w != prev)
        if nxt == anchor:
            return None
        prev, cur = cur, nxt
        walked.append(cur)
    if graph.degree(cur) != 1:
        return None
    return PendantPath(anchor=anchor, vertices=tuple(walked))


def pendant_paths(graph: Graph, anchor: int, exclude: Tuple[int, ...] = ()) -> List[PendantPath]:
    """All pendant paths at `anchor`, longest first, ties by smallest leaf label."""
    found = []
    for first in graph.neighbors(anchor):
        if first in exclude:
            continue
        path = pendant_path_from(graph, anchor, first)
        if path is not None:
            found.append(path)
    found.sort(key=lambda p: (-p.length, p.leaf))
    return found
