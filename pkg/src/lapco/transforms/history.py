# src/lapco/transforms/history.py
import logging
from collections import deque
from contextlib import contextmanager
from typing import Deque, List, Optional, Union

from ..graphs.graph import Graph
from .receipt import TransformError, TransformReceipt

logger = logging.getLogger(__name__)

Entry = Union[TransformReceipt, List[TransformReceipt]]


class ReductionTrail:
    """
    Ordered record of the transformations applied to a graph.
    Receipts recorded inside phase() are kept together and rewound together.
    """

    def __init__(self, start: Graph, max_depth: Optional[int] = None):
        self.start = start
        # each entry is one receipt or one finished phase
        self._entries: Deque[Entry] = deque(maxlen=max_depth)
        self._phase_level = 0
        self._current_phase: Optional[List[TransformReceipt]] = None

    @property
    def current(self) -> Graph:
        if self._current_phase:
            return self._current_phase[-1].after
        for entry in reversed(self._entries):
            if isinstance(entry, TransformReceipt):
                return entry.after
            if entry:
                return entry[-1].after
        return self.start

    def record(self, receipt: TransformReceipt) -> Graph:
        """Appends a receipt that continues from the current graph; returns its result."""
        if receipt.before.edges != self.current.edges:
            raise TransformError(f"{receipt.kind.value} receipt does not continue the trail")
        if self._phase_level > 0 and self._current_phase is not None:
            self._current_phase.append(receipt)
        else:
            self._entries.append(receipt)
        logger.debug(f"Recorded {receipt.kind.value} touching {list(receipt.touched)}")
        return receipt.after

    @contextmanager
    def phase(self, description: str = "phase"):
        self._phase_level += 1
        # nested phases fold into the outermost one
        if self._phase_level == 1:
            self._current_phase = []
            logger.debug(f"Starting phase '{description}'")
        try:
            yield self
        finally:
            self._phase_level -= 1
            if self._phase_level == 0 and self._current_phase is not None:
                receipts = self._current_phase
                self._current_phase = None
                logger.debug(f"Phase '{description}' finished with {len(receipts)} receipts")
                # empty phases leave no entry
                if receipts:
                    self._entries.append(receipts)

    def receipts(self) -> List[TransformReceipt]:
        flat: List[TransformReceipt] = []
        for entry in self._entries:
            if isinstance(entry, TransformReceipt):
                flat.append(entry)
            else:
                flat.extend(entry)
        return flat

    def can_rewind(self) -> bool:
        return bool(self._entries)

    def rewind(self) -> Graph:
        """Drops the last receipt or phase and returns the graph it started from."""
        if not self.can_rewind():
            logger.warning("Nothing to rewind.")
            return self.current
        entry = self._entries.pop()
        first = entry if isinstance(entry, TransformReceipt) else entry[0]
        return first.before

    def __len__(self) -> int:
        return len(self.receipts())
