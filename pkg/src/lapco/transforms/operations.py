# src/lapco/transforms/operations.py
import logging
from dataclasses import dataclass
from typing import List, Optional, Set, Tuple

import networkx as nx

from ..graphs.canonical import is_isomorphic
from ..graphs.graph import Edge, Graph
from ..graphs.structure import PendantPath, classify, pendant_paths
from .receipt import TransformError, TransformKind, TransformReceipt

logger = logging.getLogger(__name__)


def _check_vertex(graph: Graph, v: int) -> None:
    if not 0 <= v < graph.n:
        raise TransformError(f"Vertex {v} outside 0..{graph.n - 1}")


def _is_cut_edge(graph: Graph, u: int, v: int) -> bool:
    g = graph.to_networkx()
    g.remove_edge(u, v)
    return not nx.has_path(g, u, v)


def _retained_path(graph: Graph, u: int, v: int) -> PendantPath:
    # sorted longest first, ties by smallest leaf
    paths = pendant_paths(graph, v, exclude=(u,))
    if not paths:
        raise TransformError(f"xi: no pendant path attached at v={v}")
    return paths[0]


def xi(graph: Graph, u: int, v: int) -> TransformReceipt:
    """
    xi-transformation on the cut edge uv: keeps uv and the longest pendant path at v
    (ties by smallest leaf label) and re-attaches every other neighbour x of v at u.
    """
    _check_vertex(graph, u)
    _check_vertex(graph, v)
    if not graph.has_edge(u, v):
        raise TransformError(f"xi: ({u}, {v}) is not an edge")
    if graph.degree(u) == 1 or graph.degree(v) == 1:
        raise TransformError(f"xi: ({u}, {v}) is a pendant edge")
    if not _is_cut_edge(graph, u, v):
        raise TransformError(f"xi: ({u}, {v}) is not a cut edge")
    if graph.degree(v) < 3:
        raise TransformError(f"xi: d({v}) = {graph.degree(v)} < 3")
    if graph.degree(u) < 2:
        raise TransformError(f"xi: d({u}) = {graph.degree(u)} < 2")
    retained = _retained_path(graph, u, v)
    moved = sorted(graph.neighbors(v) - {u, retained.first})
    # v keeps degree 2: u and the retained path
    removed = tuple((v, x) for x in moved)
    added = tuple((u, x) for x in moved)
    after = graph.with_edges(removed=removed, added=added)
    logger.debug(f"xi({u}, {v}): kept path to leaf {retained.leaf}, moved {moved}")
    return TransformReceipt(
        before=graph, after=after, kind=TransformKind.XI,
        touched=(u, v, *moved), removed=removed, added=added,
    )


@dataclass(frozen=True)
class XiHypothesis:
    """
    s: longest path from u on its side of uv; t: retained pendant path length at v.
    relabels: xi(G, uv) is isomorphic to G, so no coefficient can drop.
    """
    s: int
    t: int
    relabels: bool = False

    @property
    def holds(self) -> bool:
        return self.s >= self.t and not self.relabels


def _longest_path_from(graph: Graph, start: int, blocked: int) -> int:
    # iterative DFS over simple paths; blocked keeps the search on the u side
    best = 0
    visited: Set[int] = {start, blocked}
    stack: List[Tuple[int, int, List[int]]] = [(start, 0, sorted(graph.neighbors(start) - {blocked}))]
    while stack:
        vertex, length, pending = stack[-1]
        best = max(best, length)
        if not pending:
            stack.pop()
            # backtrack
            if vertex != start:
                visited.discard(vertex)
            continue
        w = pending.pop()
        if w in visited:
            continue
        visited.add(w)
        stack.append((w, length + 1, sorted(graph.neighbors(w) - visited)))
    return best


def xi_hypothesis(graph: Graph, u: int, v: int) -> XiHypothesis:
    """
    Evaluates the long-path condition s >= t under which xi never increases a coefficient.
    A xi that only relabels the graph (the u side a bare path of length t, for example) is excluded.
    """
    receipt = xi(graph, u, v)
    retained = _retained_path(graph, u, v)
    return XiHypothesis(
        s=_longest_path_from(graph, u, v),
        t=retained.length,
        relabels=is_isomorphic(receipt.after, graph),
    )


def _cycle_attachments(graph: Graph, vertex: int, cycle: Set[int]) -> List[int]:
    return sorted(w for w in graph.neighbors(vertex) if w not in cycle)


def _unicyclic_cycle(graph: Graph, girth: Optional[int], name: str) -> Tuple[int, ...]:
    report = classify(graph)
    if not report.is_unicyclic:
        raise TransformError(f"{name}: graph is not unicyclic")
    if girth is not None and report.girth != girth:
        raise TransformError(f"{name}: girth is {report.girth}, expected {girth}")
    return report.cycle_vertices


def _merge_onto(graph: Graph, target: int, sources: List[int], cycle: Set[int],
                kind: TransformKind) -> TransformReceipt:
    removed: List[Edge] = []
    added: List[Edge] = []
    for source in sources:
        for x in _cycle_attachments(graph, source, cycle):
            removed.append((source, x))
            added.append((target, x))
    after = graph.with_edges(removed=removed, added=added)
    return TransformReceipt(
        before=graph, after=after, kind=kind,
        touched=(target, *sources), removed=tuple(removed), added=tuple(added),
    )


def attachment_hub(graph: Graph, cycle: Tuple[int, ...]) -> int:
    """Cycle vertex with the most non-cycle neighbours, ties by smallest label."""
    on_cycle = set(cycle)
    return min(cycle, key=lambda r: (-len(_cycle_attachments(graph, r, on_cycle)), r))


def _gather(graph: Graph, girth: int, kind: TransformKind) -> TransformReceipt:
    cycle = _unicyclic_cycle(graph, girth, kind.value)
    hub = attachment_hub(graph, cycle)
    others = [r for r in cycle if r != hub]
    # cycle edges stay; every attachment moves to the hub
    receipt = _merge_onto(graph, hub, others, set(cycle), kind)
    logger.debug(f"{kind.value}: gathered attachments of {others} at {hub}")
    return receipt


def eta(graph: Graph) -> TransformReceipt:
    """Girth 3: every non-cycle edge at u_2 and u_3 is re-attached at u_1."""
    return _gather(graph, 3, TransformKind.ETA)


def kappa(graph: Graph) -> TransformReceipt:
    """Girth 4: every non-cycle edge at u_2, u_3 and u_4 is re-attached at u_1."""
    return _gather(graph, 4, TransformKind.KAPPA)


def merge_attachments(graph: Graph, source: int, target: int) -> TransformReceipt:
    """Re-attaches every non-cycle edge of cycle vertex `source` at cycle vertex `target`."""
    cycle = _unicyclic_cycle(graph, None, "merge")
    if source not in cycle or target not in cycle:
        raise TransformError(f"merge: {source} and {target} must both lie on the cycle {list(cycle)}")
    if source == target:
        raise TransformError("merge: source and target coincide")
    return _merge_onto(graph, target, [source], set(cycle), TransformKind.MERGE)


def _two_paths(graph: Graph, v: int, leaf_a: int, leaf_b: int, name: str) -> Tuple[PendantPath, PendantPath]:
    _check_vertex(graph, v)
    if leaf_a == leaf_b:
        raise TransformError(f"{name}: the two leaves must differ")
    by_leaf = {p.leaf: p for p in pendant_paths(graph, v)}
    for leaf in (leaf_a, leaf_b):
        if leaf not in by_leaf:
            raise TransformError(f"{name}: {leaf} does not end a pendant path at {v}")
    return by_leaf[leaf_a], by_leaf[leaf_b]


def _move_leaf(graph: Graph, source: PendantPath, target: PendantPath, v: int,
               touched: Tuple[int, ...]) -> TransformReceipt:
    # only the leaf edge moves
    prev = source.vertices[-2] if source.length > 1 else v
    removed = ((prev, source.leaf),)
    added = ((target.leaf, source.leaf),)
    after = graph.with_edges(removed=removed, added=added)
    return TransformReceipt(
        before=graph, after=after, kind=TransformKind.PATH_SHIFT,
        touched=touched, removed=removed, added=added,
    )


def path_shift(graph: Graph, v: int, leaf_p: int, leaf_q: int) -> TransformReceipt:
    """
    G(p, q) -> G(p + 1, q - 1): the end vertex of the q-path moves to the end of the p-path.
    Requires p >= q >= 1; never decreases a coefficient.
    """
    long_path, short_path = _two_paths(graph, v, leaf_p, leaf_q, "path_shift")
    if long_path.length < short_path.length:
        raise TransformError(
            f"path_shift: p = {long_path.length} < q = {short_path.length}")
    return _move_leaf(graph, short_path, long_path, v, (v, leaf_p, leaf_q))


def path_balance(graph: Graph, v: int, leaf_long: int, leaf_short: int) -> TransformReceipt:
    """
    G(a, b) -> G(a - 1, b + 1) for a >= b + 2: moves one vertex from the longer pendant
    path to the shorter one. Never increases a coefficient.
    """
    long_path, short_path = _two_paths(graph, v, leaf_long, leaf_short, "path_balance")
    if long_path.length < short_path.length + 2:
        raise TransformError(
            f"path_balance: lengths {long_path.length} and {short_path.length} are already balanced")
    return _move_leaf(graph, long_path, short_path, v, (v, leaf_long, leaf_short))
