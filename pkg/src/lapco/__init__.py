# src/lapco/__init__.py
"""
lapco: exact Laplacian coefficients of unicyclic graphs and the coefficient poset.
"""

from .core.app import LabCore
from .graphs import FamilySpec, Graph, build_bst, build_u, canonical_form, make_graph
from .spectra import CoeffVector, laplacian_coefficients, laplacian_spectrum, lel, wiener_index
from .forests import coefficients_via_forests, forest_coefficient
from .transforms import balance_reduce, eta, kappa, path_shift, xi
from .poset import PosetRel, compare, enumerate_unicyclic, minimal_elements

__version__ = "0.1.0"

__all__ = [
    "LabCore",
    "FamilySpec",
    "Graph",
    "build_bst",
    "build_u",
    "canonical_form",
    "make_graph",
    "CoeffVector",
    "laplacian_coefficients",
    "laplacian_spectrum",
    "lel",
    "wiener_index",
    "coefficients_via_forests",
    "forest_coefficient",
    "balance_reduce",
    "eta",
    "kappa",
    "path_shift",
    "xi",
    "PosetRel",
    "compare",
    "enumerate_unicyclic",
    "minimal_elements",
    "__version__",
]
