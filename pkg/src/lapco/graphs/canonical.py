# src/lapco/graphs/canonical.py
import logging
from typing import FrozenSet, List, Optional, Sequence, Tuple

from .graph import Graph

logger = logging.getLogger(__name__)

Column = Tuple[int, ...]


def _refine(graph: Graph) -> List[List[int]]:
    """Colour refinement started from degrees; cells come out in a label-independent order."""
    colour = graph.degrees()
    cells_before = -1
    while True:
        signatures = [
            (colour[v], tuple(sorted(colour[w] for w in graph.neighbors(v))))
            for v in range(graph.n)
        ]
        rank = {sig: i for i, sig in enumerate(sorted(set(signatures)))}
        colour = [rank[sig] for sig in signatures]
        if len(rank) == cells_before:
            break
        cells_before = len(rank)
    cells: List[List[int]] = [[] for _ in range(cells_before)]
    for v in range(graph.n):
        cells[colour[v]].append(v)
    return cells


def _twins(adjacency: Sequence[FrozenSet[int]], u: int, w: int) -> bool:
    return adjacency[u] - {w} == adjacency[w] - {u}


class _Search:
    """Branch and bound over cell-respecting orderings, keeping the smallest adjacency string."""

    def __init__(self, graph: Graph):
        self.graph = graph
        self.cells = _refine(graph)
        self.slot_cell = [i for i, cell in enumerate(self.cells) for _ in cell]
        self.order: List[int] = []
        self.placed = set()
        self.columns: List[Column] = []
        self.best: Optional[List[Column]] = None
        self.best_order: List[int] = []

    def run(self) -> None:
        self._place(0)

    def _column(self, v: int) -> Column:
        nbrs = self.graph.neighbors(v)
        return tuple(1 if u in nbrs else 0 for u in self.order)

    def _place(self, j: int) -> None:
        if j == self.graph.n:
            if self.best is None or self.columns < self.best:
                self.best = list(self.columns)
                self.best_order = list(self.order)
            return
        candidates = [v for v in self.cells[self.slot_cell[j]] if v not in self.placed]
        scored = [(self._column(v), v) for v in candidates]
        least = min(col for col, _ in scored)
        keep: List[int] = []
        for col, v in scored:
            if col != least:
                continue
            if any(_twins(self.graph.adjacency, r, v) for r in keep):
                continue
            keep.append(v)

        self.columns.append(least)
        if self.best is not None and self.columns > self.best[:j + 1]:
            self.columns.pop()
            return
        for v in keep:
            self.order.append(v)
            self.placed.add(v)
            self._place(j + 1)
            self.placed.discard(v)
            self.order.pop()
        self.columns.pop()


def canonical_labeling(graph: Graph) -> List[int]:
    """Permutation sending each vertex to its canonical position."""
    search = _Search(graph)
    search.run()
    position = [0] * graph.n
    for pos, v in enumerate(search.best_order):
        position[v] = pos
    return position


def canonical_form(graph: Graph) -> bytes:
    """
    Isomorphism-invariant byte key: two graphs get the same key iff they are isomorphic.

    The key is n as two big-endian bytes followed by the upper-triangular adjacency
    bits of the canonical relabelling, read column by column (for j = 1..n-1, rows i < j).
    The canonical relabelling is the cell-respecting ordering whose bit string is
    lexicographically smallest.
    """
    search = _Search(graph)
    search.run()
    bits = [b for column in (search.best or []) for b in column]
    value = 0
    for b in bits:
        value = (value << 1) | b
    width = (len(bits) + 7) // 8
    if bits:
        value <<= width * 8 - len(bits)
    return graph.n.to_bytes(2, 'big') + value.to_bytes(width, 'big')


def canonical_graph(graph: Graph) -> Graph:
    return graph.relabel(canonical_labeling(graph))


def is_isomorphic(a: Graph, b: Graph) -> bool:
    if a.n != b.n or a.m != b.m or sorted(a.degrees()) != sorted(b.degrees()):
        return False
    return canonical_form(a) == canonical_form(b)
