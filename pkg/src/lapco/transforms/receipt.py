# src/lapco/transforms/receipt.py
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Tuple

from ..graphs.graph import Edge, Graph

logger = logging.getLogger(__name__)


class TransformError(ValueError):
    """A transformation precondition does not hold for the given graph and vertices."""
    pass


class TransformKind(str, Enum):
    XI = "xi"
    ETA = "eta"
    KAPPA = "kappa"
    MERGE = "merge"
    PATH_SHIFT = "path_shift"
    BALANCE_REDUCE = "balance_reduce"


@dataclass(frozen=True)
class TransformReceipt:
    """One applied edge re-attachment: the graphs on both sides and what was touched."""
    before: Graph
    after: Graph
    kind: TransformKind
    touched: Tuple[int, ...] = ()
    removed: Tuple[Edge, ...] = field(default=())
    added: Tuple[Edge, ...] = field(default=())

    def __post_init__(self):
        # re-attachment keeps n and m
        if self.before.n != self.after.n or self.before.m != self.after.m:
            raise TransformError(
                f"{self.kind.value}: order/size changed from ({self.before.n}, {self.before.m}) "
                f"to ({self.after.n}, {self.after.m})")
        if self.kind is TransformKind.XI and len(self.before.leaves()) != len(self.after.leaves()):
            raise TransformError("xi changed the number of leaves")

    @property
    def changed(self) -> bool:
        return self.before.edges != self.after.edges

    def to_document(self) -> Dict[str, Any]:
        return {
            "kind": self.kind.value,
            "touched": list(self.touched),
            "removed": [list(e) for e in self.removed],
            "added": [list(e) for e in self.added],
        }
