# src/lapco/forests/oracle.py
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from math import prod
from typing import List, Tuple

from sympy import ZZ
from sympy.polys.matrices import DomainMatrix

from ..graphs.graph import Graph
from ..spectra.coefficients import CoeffVector
from .union_find import UnionFind

logger = logging.getLogger(__name__)

FOREST_MAX_N = 14


class ForestError(ValueError):
    """Component count out of range or graph too large for subset enumeration."""
    pass


@dataclass(frozen=True)
class ForestSum:
    """Sum over spanning forests with k components of the product of component orders."""
    k: int
    total: int


def _forest_weight(n: int, edges: Tuple[Tuple[int, int], ...]) -> int:
    uf = UnionFind(n)
    for u, v in edges:
        if not uf.union(u, v):
            return 0
    return prod(uf.component_sizes())


def _partial_forest_sum(args: Tuple[Graph, int, int]) -> int:
    """Forests of `size` edges whose smallest edge index is `first`."""
    graph, size, first = args
    head = graph.edges[first]
    total = 0
    for rest in combinations(graph.edges[first + 1:], size - 1):
        total += _forest_weight(graph.n, (head,) + rest)
    return total


def forest_coefficient(graph: Graph, k: int, workers: int = 1) -> ForestSum:
    """
    Brute-force sum over all spanning forests of `graph` with exactly k components.
    Isolated vertices count as components of order 1. Equals c_{n-k}.
    """
    n = graph.n
    if not 1 <= k <= n:
        raise ForestError(f"Component count k={k} outside 1..{n}")
    size = n - k
    if size == 0:
        return ForestSum(k=k, total=1)
    if size > graph.m:
        return ForestSum(k=k, total=0)
    pieces = [(graph, size, first) for first in range(graph.m - size + 1)]
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            partials: List[int] = list(pool.map(_partial_forest_sum, pieces))
    else:
        partials = [_partial_forest_sum(piece) for piece in pieces]
    return ForestSum(k=k, total=sum(partials))


def coefficients_via_forests(graph: Graph, workers: int = 1) -> CoeffVector:
    """c_0..c_n assembled from forest sums: c_j = forest(n - j) for j < n, c_n = 0."""
    if graph.n > FOREST_MAX_N:
        raise ForestError(f"Forest enumeration is limited to n <= {FOREST_MAX_N}, got n={graph.n}")
    n = graph.n
    c = [forest_coefficient(graph, n - j, workers=workers).total for j in range(n)] + [0]
    logger.debug(f"Forest coefficients for {graph}: {c}")
    return CoeffVector(n=n, c=tuple(c))


def spanning_tree_count(graph: Graph) -> int:
    """Number of spanning trees: exact determinant of the Laplacian with one row and column removed."""
    if graph.n == 1:
        return 1
    rows = [[ZZ(x) for x in row[1:]] for row in graph.laplacian_rows()[1:]]
    return int(DomainMatrix(rows, (graph.n - 1, graph.n - 1), ZZ).det())
