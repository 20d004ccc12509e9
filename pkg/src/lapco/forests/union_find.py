# src/lapco/forests/union_find.py
from typing import List


class UnionFind:
    """Disjoint sets over 0..n-1 with union by rank, path splitting and set sizes."""

    def __init__(self, n: int):
        if n < 0:
            raise ValueError("Number of elements must be non-negative")
        self.parents = list(range(n))
        self.ranks = [0] * n
        # positive only at representatives
        self.sizes = [1] * n
        self.num_sets = n

    def find(self, x: int) -> int:
        parent = self.parents[x]
        while parent != x:
            grandparent = self.parents[parent]
            self.parents[x] = grandparent
            x, parent = parent, grandparent
        return x

    def union(self, a: int, b: int) -> bool:
        """Merges the sets of a and b; False if they were already joined (the edge closes a cycle)."""
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.ranks[ra] < self.ranks[rb]:
            ra, rb = rb, ra
        elif self.ranks[ra] == self.ranks[rb]:
            self.ranks[ra] += 1
        self.parents[rb] = ra
        self.sizes[ra] += self.sizes[rb]
        self.sizes[rb] = 0
        self.num_sets -= 1
        return True

    def component_sizes(self) -> List[int]:
        return [s for i, s in enumerate(self.sizes) if self.parents[i] == i]
