# src/lapco/poset/catalog.py
import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Iterator, List, Optional, Tuple

from ..graphs.canonical import canonical_form
from ..graphs.graph import Graph
from ..graphs.structure import classify
from ..spectra.coefficients import CoeffVector, laplacian_coefficients
from .order import PosetRel, compare

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CatalogEntry:
    form: bytes
    graph: Graph
    coeffs: CoeffVector
    girth: int
    leaves: int
    attachments: int

    @property
    def form_hex(self) -> str:
        return self.form.hex()


def make_entry(graph: Graph, girth: Optional[int] = None, attachments: Optional[int] = None) -> CatalogEntry:
    """Entry for a unicyclic graph; girth and attachment count are derived when not given."""
    if girth is None or attachments is None:
        report = classify(graph)
        girth = report.girth if girth is None else girth
        if attachments is None:
            attachments = sum(1 for v in report.cycle_vertices if graph.degree(v) > 2)
    return CatalogEntry(
        form=canonical_form(graph),
        graph=graph,
        coeffs=laplacian_coefficients(graph),
        girth=girth,
        leaves=len(graph.leaves()),
        attachments=attachments,
    )


@dataclass(frozen=True)
class FamilyCatalog:
    """Pairwise non-isomorphic unicyclic graphs of one order, sorted by canonical form."""
    n: int
    l: Optional[int] = None
    g: Optional[int] = None
    label: str = "full"
    members: Tuple[CatalogEntry, ...] = field(default=())

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[CatalogEntry]:
        return iter(self.members)

    def forms(self) -> List[bytes]:
        return [entry.form for entry in self.members]

    def find(self, form: bytes) -> Optional[CatalogEntry]:
        return next((entry for entry in self.members if entry.form == form), None)

    def restrict(self, label: str, predicate: Callable[[CatalogEntry], bool]) -> 'FamilyCatalog':
        kept = tuple(entry for entry in self.members if predicate(entry))
        return FamilyCatalog(n=self.n, l=self.l, g=self.g, label=label, members=kept)

    def parameters(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "l": "any" if self.l is None else self.l,
            "g": "any" if self.g is None else self.g,
            "family": self.label,
        }


def minimal_elements(catalog: FamilyCatalog) -> FamilyCatalog:
    """Members with no strictly smaller member, in canonical-form order."""
    by_total = sorted(catalog.members, key=lambda entry: (entry.coeffs.total(), entry.form))
    minimal: List[CatalogEntry] = []
    for entry in by_total:
        # a strictly smaller member has a strictly smaller coefficient sum, so it was seen already
        if any(compare(m.coeffs, entry.coeffs) is PosetRel.LESS_STRICT for m in minimal):
            continue
        minimal.append(entry)
    logger.debug(f"{len(minimal)} minimal elements among {len(catalog)} members")
    return FamilyCatalog(
        n=catalog.n, l=catalog.l, g=catalog.g, label=f"{catalog.label}:minimal",
        members=tuple(sorted(minimal, key=lambda entry: entry.form)),
    )
