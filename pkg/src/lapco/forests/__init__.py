from .oracle import (
    FOREST_MAX_N,
    ForestError,
    ForestSum,
    coefficients_via_forests,
    forest_coefficient,
    spanning_tree_count,
)
from .union_find import UnionFind
