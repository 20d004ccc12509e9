# src/lapco/poset/trees.py
from collections import Counter
from functools import lru_cache
from itertools import combinations_with_replacement, product
from typing import List, Tuple

from ..graphs.families import RootedTree
from ..graphs.graph import make_graph

# A rooted tree shape is the sorted tuple of its children's shapes; () is a single vertex.
Shape = Tuple


@lru_cache(maxsize=None)
def partitions(n: int) -> Tuple[Tuple[int, ...], ...]:
    """Integer partitions of n with non-increasing parts."""
    if n == 0:
        return ((),)
    found = []
    for first in range(n, 0, -1):
        for rest in partitions(n - first):
            if not rest or first >= rest[0]:
                found.append((first,) + rest)
    return tuple(found)


@lru_cache(maxsize=None)
def rooted_shapes(n: int) -> Tuple[Shape, ...]:
    """All rooted trees on n vertices up to isomorphism, as canonical nested tuples, sorted."""
    if n < 1:
        return ()
    if n == 1:
        return ((),)
    shapes = set()
    for partition in partitions(n - 1):
        selections = [
            list(combinations_with_replacement(rooted_shapes(size), count))
            for size, count in sorted(Counter(partition).items())
        ]
        for chosen in product(*selections):
            children = [shape for group in chosen for shape in group]
            shapes.add(tuple(sorted(children)))
    return tuple(sorted(shapes))


def shape_size(shape: Shape) -> int:
    return 1 + sum(shape_size(child) for child in shape)


def shape_leaves(shape: Shape) -> int:
    """Leaves of the tree other than the root."""
    return sum(1 if not child else shape_leaves(child) for child in shape)


def shape_to_tree(shape: Shape) -> RootedTree:
    """Preorder labelling with the root at 0."""
    edges: List[Tuple[int, int]] = []
    stack = [(shape, 0)]
    next_label = 1
    while stack:
        node, label = stack.pop()
        for child in node:
            edges.append((label, next_label))
            stack.append((child, next_label))
            next_label += 1
    return RootedTree(tree=make_graph(next_label, edges), root=0)
