# src/lapco/core/app.py
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

import platformdirs

from ..forests.oracle import coefficients_via_forests
from ..graphs.families import FamilySpec, build_bst, build_u, recognize_u
from ..graphs.graph import Graph
from ..graphs.structure import classify
from ..poset.catalog import FamilyCatalog, minimal_elements
from ..poset.enumeration import enumerate_unicyclic
from ..poset.order import PosetRel, compare, first_index
from ..poset.verifiers import (
    Restriction,
    VerificationReport,
    check_conjecture,
    entry_document,
    incomparability_probe,
    restrict_family,
    verify_minimal_family,
)
from ..spectra.coefficients import laplacian_coefficients
from ..spectra.spectrum import laplacian_spectrum, lel
from ..transforms import operations
from ..transforms.receipt import TransformError, TransformReceipt
from ..transforms.reduction import balance_reduce
from ..utils.config_loader import ConfigError, LabSettings, load_toml

APP_NAME = "lapco"
APP_AUTHOR = "lapco"
PACKAGE_LOGGER = "lapco"

logger = logging.getLogger(__name__)

# verify --theorem value -> (restriction, default girth)
THEOREM_FAMILIES = {
    "3.3": ("one_attachment", None),
    "3.4": ("two_attachments", None),
    "4.3": ("full", 3),
    "4.6": ("full", 4),
}

# the two order-10 graphs with incomparable coefficient vectors
COUNTEREXAMPLE = FamilySpec(n=10, l=2, g=3, p=0), FamilySpec(n=10, l=2, g=3, p=1)


def graph_document(graph: Graph) -> Dict[str, Any]:
    return {"n": graph.n, "m": graph.m, "edges": [list(e) for e in graph.edges]}


class LabCore:
    """
    Owns the loaded configuration and runs the library operations behind each CLI
    subcommand, returning JSON-ready documents.
    """
    APP_NAME = APP_NAME
    APP_AUTHOR = APP_AUTHOR

    def __init__(self, config_path: Optional[str] = None, log_level: Optional[str] = None,
                 workers: Optional[int] = None):
        self.config_path = Path(config_path) if config_path else self.default_config_path()
        self.config: Dict[str, Any] = {}
        self.profile_metadata: Dict[str, Any] = {}
        # an explicit --config must exist; the per-user profile is optional
        self._load_app_config(required=config_path is not None)
        self.settings = LabSettings.from_mapping(self.config)
        # --workers overrides the profile
        if workers is not None:
            self.settings = LabSettings(log_level=self.settings.log_level, workers=max(1, workers),
                                        max_n=self.settings.max_n)
        self.apply_log_level(log_level or self.settings.log_level)
        logger.debug(f"LabCore ready: {self.settings}")

    @classmethod
    def default_config_path(cls) -> Path:
        return Path(platformdirs.user_config_dir(cls.APP_NAME, cls.APP_AUTHOR)) / "config.toml"

    def _load_app_config(self, required: bool) -> None:
        logger.debug(f"Loading configuration from {self.config_path}")
        if not self.config_path.is_file():
            if required:
                raise ConfigError(f"Configuration file not found: {self.config_path}")
            logger.debug("No configuration file, using defaults.")
            return
        data = load_toml(self.config_path)
        self.config = data.get("config", {})
        self.profile_metadata = data.get("profile_metadata", {})

    @staticmethod
    def apply_log_level(level_name: str) -> None:
        level = getattr(logging, str(level_name).upper(), None)
        package_logger = logging.getLogger(PACKAGE_LOGGER)
        if not isinstance(level, int):
            logger.warning(f"Invalid logging level '{level_name}', using INFO.")
            level = logging.INFO
        package_logger.setLevel(level)

    def _with_metadata(self, document: Dict[str, Any]) -> Dict[str, Any]:
        if self.profile_metadata:
            document["profile"] = dict(self.profile_metadata)
        return document

    # --- graphs -----------------------------------------------------------

    def build(self, family: str, n: int, l: int, g: Optional[int] = None, p: int = 0) -> Graph:
        if family == "bst":
            return build_bst(n, l)
        return build_u(FamilySpec(n=n, l=l, g=g if g is not None else 3, p=p))

    def coefficients(self, graph: Graph, oracle: bool = False) -> Tuple[Dict[str, Any], bool]:
        coeffs = laplacian_coefficients(graph)
        report = classify(graph)
        document: Dict[str, Any] = {
            "graph": graph_document(graph),
            "connected": report.connected,
            "girth": report.girth,
            "leaves": report.leaf_count,
            "coefficients": coeffs.to_strings(),
        }
        spec = recognize_u(graph)
        if spec is not None:
            document["family"] = {"n": spec.n, "l": spec.l, "g": spec.g, "p": spec.p}
        passed = True
        if oracle:
            forest = coefficients_via_forests(graph, workers=self.settings.workers)
            passed = forest.c == coeffs.c
            document["forest_coefficients"] = forest.to_strings()
            document["verdict"] = "match" if passed else "mismatch"
        return self._with_metadata(document), passed

    def compare_graphs(self, a: Graph, b: Graph) -> Dict[str, Any]:
        ca, cb = laplacian_coefficients(a), laplacian_coefficients(b)
        relation = compare(ca, cb)
        return {
            "a": {"graph": graph_document(a), "coefficients": ca.to_strings()},
            "b": {"graph": graph_document(b), "coefficients": cb.to_strings()},
            "relation": relation.value,
            "first_below": first_index(ca, cb, strictly_less=True),
            "first_above": first_index(ca, cb, strictly_less=False),
        }

    def lel_document(self, graph: Graph) -> Dict[str, Any]:
        return {
            "graph": graph_document(graph),
            "spectrum": list(laplacian_spectrum(graph).mu),
            "lel": lel(graph),
        }

    # --- transforms -------------------------------------------------------

    def transform(self, graph: Graph, kind: str, u: Optional[int] = None, v: Optional[int] = None,
                  leaf_p: Optional[int] = None, leaf_q: Optional[int] = None) -> Tuple[Graph, Dict[str, Any], bool]:
        receipts = self._run_transform(graph, kind, u, v, leaf_p, leaf_q)
        after = receipts[-1].after if receipts else graph
        before_coeffs, after_coeffs = laplacian_coefficients(graph), laplacian_coefficients(after)
        relation = compare(after_coeffs, before_coeffs)
        document: Dict[str, Any] = {
            "kind": kind,
            "before": graph_document(graph),
            "after": graph_document(after),
            "steps": [r.to_document() for r in receipts],
            "coefficients_before": before_coeffs.to_strings(),
            "coefficients_after": after_coeffs.to_strings(),
            "relation": relation.value,
        }
        # only a reduction promises a relation
        passed = True
        if kind == "reduce":
            passed = relation in (PosetRel.LESS_STRICT, PosetRel.EQUAL)
            document["passed"] = passed
        if kind == "xi":
            hypothesis = operations.xi_hypothesis(graph, u, v)
            document["hypothesis"] = {"s": hypothesis.s, "t": hypothesis.t, "holds": hypothesis.holds}
        return after, document, passed

    @staticmethod
    def _require(name: str, value: Optional[int]) -> int:
        if value is None:
            raise TransformError(f"--{name.replace('_', '-')} is required for this transformation")
        return value

    def _run_transform(self, graph: Graph, kind: str, u, v, leaf_p, leaf_q) -> List[TransformReceipt]:
        if kind == "xi":
            return [operations.xi(graph, self._require("u", u), self._require("v", v))]
        if kind == "eta":
            return [operations.eta(graph)]
        if kind == "kappa":
            return [operations.kappa(graph)]
        if kind == "merge":
            return [operations.merge_attachments(graph, self._require("u", u), self._require("v", v))]
        if kind == "shift":
            return [operations.path_shift(graph, self._require("v", v),
                                          self._require("leaf_p", leaf_p), self._require("leaf_q", leaf_q))]
        if kind == "balance":
            return [operations.path_balance(graph, self._require("v", v),
                                            self._require("leaf_p", leaf_p), self._require("leaf_q", leaf_q))]
        if kind == "reduce":
            return balance_reduce(graph)
        raise TransformError(f"Unknown transformation kind '{kind}'")

    # --- poset ------------------------------------------------------------

    def enumerate(self, n: int, l: Optional[int] = None, g: Optional[int] = None) -> FamilyCatalog:
        return enumerate_unicyclic(n, l=l, g=g, workers=self.settings.workers, max_n=self.settings.max_n)

    def catalog_index(self, catalog: FamilyCatalog) -> Dict[str, Any]:
        return self._with_metadata({
            "parameters": catalog.parameters(),
            "count": len(catalog),
            "members": [entry_document(e) for e in catalog],
        })

    def minimal(self, n: int, l: Optional[int], g: Optional[int], restriction: str = "full") -> Dict[str, Any]:
        catalog = restrict_family(self.enumerate(n, l, g), Restriction(restriction))
        minimal = minimal_elements(catalog)
        return self._with_metadata({
            "parameters": catalog.parameters(),
            "family_size": len(catalog),
            "minimal": [entry_document(e, with_lel=True) for e in minimal],
        })

    def verify(self, theorem: str, n: int, l: Optional[int] = None, g: Optional[int] = None,
               p: Optional[int] = None, q: Optional[int] = None) -> VerificationReport:
        if theorem == "conjecture":
            return check_conjecture(n, workers=self.settings.workers, max_n=self.settings.max_n)
        if l is None:
            raise ConfigError("--l is required for this verification")
        if theorem == "incomparable":
            return incomparability_probe(n, l, g if g is not None else 3,
                                         self._require("p", p), self._require("q", q))
        restriction, girth = THEOREM_FAMILIES[theorem]
        if girth is not None and g is not None and g != girth:
            raise ConfigError(f"--theorem {theorem} covers girth {girth}, got --g {g}")
        return verify_minimal_family(n, l, girth or g or 3, restriction,
                                     workers=self.settings.workers, max_n=self.settings.max_n)

    def counterexample(self) -> Tuple[Dict[str, Any], bool]:
        first, second = COUNTEREXAMPLE
        probe = incomparability_probe(first.n, first.l, first.g, second.p, first.p)
        graphs = [build_u(spec) for spec in COUNTEREXAMPLE]
        document = {
            "graphs": [
                {"family": {"n": s.n, "l": s.l, "g": s.g, "p": s.p}, "graph": graph_document(G),
                 "coefficients": laplacian_coefficients(G).to_strings(), "lel": lel(G)}
                for s, G in zip(COUNTEREXAMPLE, graphs)
            ],
            "relation": probe.data["relation"],
            "witnesses": {
                "c_n_minus_2": first.n - 2,
                "band": probe.data["band"],
                "band_witnesses": probe.data["band_witnesses"],
            },
            "checks": probe.to_document()["checks"],
            "passed": probe.passed,
        }
        return document, probe.passed
