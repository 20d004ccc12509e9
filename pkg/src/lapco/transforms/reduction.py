# src/lapco/transforms/reduction.py
import logging
from typing import List, Set, Tuple

from ..graphs.graph import Graph, GraphError
from ..graphs.structure import UnicyclicLayout, unicyclic_layout
from .history import ReductionTrail
from .operations import path_balance, xi, xi_hypothesis
from .receipt import TransformError, TransformReceipt

logger = logging.getLogger(__name__)


def _layout(graph: Graph) -> UnicyclicLayout:
    try:
        return unicyclic_layout(graph)
    except GraphError as e:
        raise TransformError(f"balance_reduce: {e}") from e


def _legs(layout: UnicyclicLayout, center: int) -> List[Tuple[int, int]]:
    """(length, leaf) of each path hanging below `center`; valid when no branch point lies below it."""
    legs = []
    for child in layout.children[center]:
        length, cur = 1, child
        # below a branch-free centre every vertex has at most one child
        while layout.children[cur]:
            cur = layout.children[cur][0]
            length += 1
        legs.append((length, cur))
    return legs


def _ancestors(layout: UnicyclicLayout, v: int) -> Set[int]:
    found = set()
    cur = layout.parent[v]
    while cur is not None:
        found.add(cur)
        cur = layout.parent[cur]
    return found


def _is_balanced(layout: UnicyclicLayout, center: int) -> bool:
    lengths = [length for length, _ in _legs(layout, center)]
    return not lengths or max(lengths) - min(lengths) <= 1


def is_reduced(graph: Graph) -> bool:
    """
    True when every attached tree is a balanced starlike tree centred at its cycle vertex,
    except at most one that is a bare path from its cycle vertex to a balanced starlike centre.
    """
    layout = _layout(graph)
    tails = 0
    for root in layout.cycle:
        branch = layout.branch_points(root)
        if len(branch) > 1:
            return False
        if not branch:
            continue
        center = branch[0]
        if center != root:
            tails += 1
        if not _is_balanced(layout, center):
            return False
    return tails <= 1


def _apply_xi(trail: ReductionTrail, u: int, v: int) -> None:
    graph = trail.current
    hypothesis = xi_hypothesis(graph, u, v)
    if not hypothesis.holds:
        raise TransformError(
            f"balance_reduce: xi({u}, {v}) lacks the long-path condition (s={hypothesis.s}, t={hypothesis.t})")
    trail.record(xi(graph, u, v))


def _fold_side_tree(trail: ReductionTrail, root: int) -> None:
    # deepest branch vertex first; its branches move one level up
    while True:
        layout = _layout(trail.current)
        inner = [v for v in layout.branch_points(root) if v != root]
        if not inner:
            return
        v = min(inner, key=lambda x: (-layout.depth[x], x))
        _apply_xi(trail, layout.parent[v], v)


def _fold_main_tree(trail: ReductionTrail, root: int) -> int:
    """Folds the tree holding the longest root path down to one branch vertex; returns its (possibly new) root."""
    while True:
        layout = _layout(trail.current)
        branch = layout.branch_points(root)
        if len(branch) < 2:
            return root
        terminal = [v for v in branch if not any(v in _ancestors(layout, w) for w in branch if w != v)]
        if len(terminal) >= 2:
            v = min(terminal, key=lambda x: (max(length for length, _ in _legs(layout, x)), x))
            _apply_xi(trail, layout.parent[v], v)
            continue

        v = terminal[0]
        if xi_hypothesis(trail.current, layout.parent[v], v).holds:
            _apply_xi(trail, layout.parent[v], v)
            continue

        # all branch vertices sit on the path from the root to v; fold the topmost one downwards
        top = min(branch, key=lambda x: (layout.depth[x], x))
        below = v
        while layout.parent[below] != top:
            below = layout.parent[below]
        _apply_xi(trail, below, top)
        if top == root:
            logger.debug(f"balance_reduce: cycle vertex moved from {root} to {below}")
            root = below


def _balance_legs(trail: ReductionTrail) -> None:
    layout = _layout(trail.current)
    for root in layout.cycle:
        branch = layout.branch_points(root)
        center = branch[0] if branch else root
        while True:
            graph = trail.current
            legs = _legs(_layout(graph), center)
            if len(legs) < 2:
                break
            longest = min(legs, key=lambda leg: (-leg[0], leg[1]))
            shortest = min(legs, key=lambda leg: (leg[0], leg[1]))
            if longest[0] - shortest[0] <= 1:
                break
            trail.record(path_balance(graph, center, longest[1], shortest[1]))


def balance_reduce(graph: Graph) -> List[TransformReceipt]:
    """
    Reduces a unicyclic graph to the balanced form by xi-transformations and leg balancing,
    never increasing a coefficient. Returns the applied receipts; empty when already reduced.
    """
    layout = _layout(graph)
    if is_reduced(graph):
        return []
    trail = ReductionTrail(graph)
    # the tallest attached tree survives; ties by smallest root
    main_root = min(layout.nontrivial_roots(), key=lambda r: (-layout.height(r), r))
    with trail.phase("side trees"):
        for root in layout.cycle:
            if root != main_root:
                _fold_side_tree(trail, root)
    with trail.phase("main tree"):
        main_root = _fold_main_tree(trail, main_root)
    with trail.phase("legs"):
        _balance_legs(trail)
    if not is_reduced(trail.current):
        raise TransformError(f"balance_reduce stopped at a graph that is not reduced: {trail.current}")
    logger.info(f"balance_reduce: {len(trail)} steps, main tree at cycle vertex {main_root}")
    return trail.receipts()


def reduced_graph(graph: Graph) -> Graph:
    receipts = balance_reduce(graph)
    return receipts[-1].after if receipts else graph
