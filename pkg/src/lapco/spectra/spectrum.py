# src/lapco/spectra/spectrum.py
import logging
import math
from dataclasses import dataclass
from typing import Tuple

import networkx as nx
import numpy as np

from ..graphs.graph import Graph, NotATreeError
from ..graphs.structure import classify

logger = logging.getLogger(__name__)

# eigvalsh noise around the zero eigenvalue
ZERO_TOLERANCE = 1e-9


@dataclass(frozen=True)
class Spectrum:
    """Laplacian eigenvalues mu_1 >= ... >= mu_n."""
    mu: Tuple[float, ...]

    @property
    def n(self) -> int:
        return len(self.mu)

    def elementary_symmetric(self, k: int) -> float:
        """sigma_k of mu_1..mu_{n-1}; numeric counterpart of c_k."""
        e = np.zeros(k + 1)
        e[0] = 1.0
        for x in self.mu[:-1]:
            e[1:] = e[1:] + x * e[:-1]
        return float(e[k])


def laplacian_spectrum(graph: Graph) -> Spectrum:
    laplacian = np.array(graph.laplacian_rows(), dtype=float)
    values = np.linalg.eigvalsh(laplacian)[::-1]
    values = np.where(np.abs(values) < ZERO_TOLERANCE, 0.0, values)
    return Spectrum(mu=tuple(float(x) for x in values))


def lel(graph: Graph) -> float:
    """Laplacian-like energy: sum of square roots of the n-1 largest Laplacian eigenvalues."""
    mu = laplacian_spectrum(graph).mu
    return math.fsum(math.sqrt(max(x, 0.0)) for x in mu[:-1])


def wiener_index(graph: Graph) -> int:
    """Sum of distances over unordered vertex pairs of a tree."""
    if not classify(graph).is_tree:
        raise NotATreeError(f"Wiener index is defined here for trees only: {graph}")
    lengths = dict(nx.all_pairs_shortest_path_length(graph.to_networkx()))
    return sum(d for row in lengths.values() for d in row.values()) // 2
