# src/lapco/spectra/coefficients.py
import logging
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from sympy import ZZ
from sympy.polys.matrices import DomainMatrix

from ..graphs.graph import Graph

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CoeffVector:
    """
    Laplacian coefficients c_0..c_n of an n-vertex graph, as exact Python integers:
    det(xI - L) = sum_k (-1)^k c_k x^(n-k).
    """
    n: int
    c: Tuple[int, ...]

    def __post_init__(self):
        if len(self.c) != self.n + 1:
            raise ValueError(f"Expected {self.n + 1} coefficients for n={self.n}, got {len(self.c)}")

    def __getitem__(self, k: int) -> int:
        return self.c[k]

    def __len__(self) -> int:
        return len(self.c)

    def total(self) -> int:
        return sum(self.c)

    def to_strings(self) -> List[str]:
        return [str(x) for x in self.c]

    @classmethod
    def from_values(cls, values: Sequence) -> 'CoeffVector':
        """Accepts integers or decimal strings (the JSON report encoding)."""
        c = tuple(int(v) for v in values)
        return cls(n=len(c) - 1, c=c)


def laplacian_matrix(graph: Graph) -> DomainMatrix:
    rows = [[ZZ(x) for x in row] for row in graph.laplacian_rows()]
    return DomainMatrix(rows, (graph.n, graph.n), ZZ)


def laplacian_coefficients(graph: Graph) -> CoeffVector:
    """Exact coefficients from the division-free characteristic polynomial of D - A over ZZ."""
    charpoly = laplacian_matrix(graph).charpoly()
    c = tuple(int(a) if k % 2 == 0 else -int(a) for k, a in enumerate(charpoly))
    logger.debug(f"Coefficients for {graph}: {list(c)}")
    return CoeffVector(n=graph.n, c=c)
