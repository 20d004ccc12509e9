# src/lapco/graphs/families.py
import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence

from .graph import Edge, Graph, make_graph
from .structure import classify, unicyclic_layout

logger = logging.getLogger(__name__)


class FamilySpecError(ValueError):
    """Parameters that do not describe a member of a constructed family."""
    pass


@dataclass(frozen=True)
class FamilySpec:
    """Parameters (n, l, g, p) of the balanced starlike unicyclic graph U_{n,l}^{g,p}."""
    n: int
    l: int
    g: int
    p: int = 0

    def validate(self) -> None:
        if self.g < 3:
            raise FamilySpecError(f"Girth must be at least 3, got g={self.g}")
        if self.l < 1:
            raise FamilySpecError(f"Leaf count must be at least 1, got l={self.l}")
        if self.p < 0:
            raise FamilySpecError(f"Tail length must be non-negative, got p={self.p}")
        if self.n < self.g + self.p + self.l:
            raise FamilySpecError(
                f"n={self.n} is too small: need n >= g + p + l = {self.g + self.p + self.l}")


def max_minimal_tail(n: int, l: int, g: int) -> int:
    """Largest tail length p for which U^{g,p} is a minimal element: floor((n - g - g*l + l) / (l + 1))."""
    return (n - g - g * l + l) // (l + 1)


def bst_leg_lengths(n: int, l: int) -> List[int]:
    """Leg lengths of BST_{n,l}, longer legs first."""
    if l < 1:
        raise FamilySpecError(f"A starlike tree needs at least one leg, got l={l}")
    if n < l + 1:
        raise FamilySpecError(f"BST needs n >= l + 1, got n={n}, l={l}")
    q, r = divmod(n - 1, l)
    return [q + 1] * r + [q] * (l - r)


def _attach_legs(edges: List[Edge], center: int, next_label: int, legs: Sequence[int]) -> int:
    for length in legs:
        prev = center
        for _ in range(length):
            edges.append((prev, next_label))
            prev = next_label
            next_label += 1
    return next_label


def build_bst(n: int, l: int) -> Graph:
    """Balanced starlike tree BST_{n,l} with center 0 and each leg labelled consecutively."""
    legs = bst_leg_lengths(n, l)
    edges: List[Edge] = []
    _attach_legs(edges, 0, 1, legs)
    return make_graph(n, edges)


def build_u(spec: FamilySpec) -> Graph:
    """
    U_{n,l}^{g,p}: cycle 0..g-1 (u_1 = 0), tail w_1..w_p labelled g..g+p-1 hanging at 0,
    and BST_{n-p-g+1, l} centred at the tail end (at 0 itself when p = 0).
    """
    spec.validate()
    n, l, g, p = spec.n, spec.l, spec.g, spec.p
    edges: List[Edge] = [(i, (i + 1) % g) for i in range(g)]
    center = 0
    for w in range(g, g + p):
        edges.append((center, w))
        center = w
    _attach_legs(edges, center, g + p, bst_leg_lengths(n - p - g + 1, l))
    graph = make_graph(n, edges)
    logger.debug(f"Built U(n={n}, l={l}, g={g}, p={p}): {graph}")
    return graph


@dataclass(frozen=True)
class RootedTree:
    tree: Graph
    root: int = 0

    @property
    def size(self) -> int:
        return self.tree.n

    @classmethod
    def trivial(cls) -> 'RootedTree':
        return cls(tree=make_graph(1, []), root=0)


def compose_cycle_trees(g: int, trees: Sequence[RootedTree]) -> Graph:
    """
    C_{T_1,...,T_g}: cycle 0..g-1 with the root of trees[i] identified with cycle vertex i.
    Non-root vertices of each tree follow in increasing original label order.
    """
    if g < 3:
        raise FamilySpecError(f"Girth must be at least 3, got g={g}")
    if len(trees) != g:
        raise FamilySpecError(f"Expected {g} rooted trees, got {len(trees)}")
    edges: List[Edge] = [(i, (i + 1) % g) for i in range(g)]
    next_label = g
    for i, rooted in enumerate(trees):
        if not 0 <= rooted.root < rooted.size:
            raise FamilySpecError(f"Tree {i}: root {rooted.root} outside 0..{rooted.size - 1}")
        if rooted.size > 1 and not classify(rooted.tree).is_tree:
            raise FamilySpecError(f"Tree {i} is not a tree: {rooted.tree}")
        mapping = {rooted.root: i}
        for v in range(rooted.size):
            if v != rooted.root:
                mapping[v] = next_label
                next_label += 1
        edges.extend((mapping[a], mapping[b]) for a, b in rooted.tree.edges)
    return make_graph(next_label, edges)


def cycle_graph(g: int) -> Graph:
    return compose_cycle_trees(g, [RootedTree.trivial()] * g)


def path_graph(n: int) -> Graph:
    return make_graph(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(leaves: int) -> Graph:
    return make_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def recognize_u(graph: Graph) -> Optional[FamilySpec]:
    """
    The FamilySpec of a graph isomorphic to some U_{n,l}^{g,p}, or None.
    With a single leg every tail length gives the same graph, reported as p = 0.
    """
    report = classify(graph)
    if not report.is_unicyclic:
        return None
    layout = unicyclic_layout(graph)
    roots = layout.nontrivial_roots()
    if len(roots) != 1:
        return None
    root = roots[0]
    branch = layout.branch_points(root)
    if len(branch) > 1:
        return None
    center = branch[0] if branch else root
    legs = []
    for child in layout.children[center]:
        length, cur = 1, child
        while layout.children[cur]:
            cur = layout.children[cur][0]
            length += 1
        legs.append(length)
    l = len(legs)
    p = layout.depth[center] if l > 1 else 0
    spec = FamilySpec(n=graph.n, l=l, g=report.girth, p=p)
    if sorted(legs, reverse=True) != bst_leg_lengths(graph.n - p - spec.g + 1, l):
        return None
    return spec
