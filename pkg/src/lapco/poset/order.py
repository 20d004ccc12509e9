# src/lapco/poset/order.py
import logging
from enum import Enum
from typing import Optional

from ..spectra.coefficients import CoeffVector

logger = logging.getLogger(__name__)


class PosetError(ValueError):
    """Coefficient vectors of different lengths cannot be compared."""
    pass


class PosetRel(str, Enum):
    EQUAL = "Equal"
    LESS_STRICT = "LessStrict"
    GREATER_STRICT = "GreaterStrict"
    INCOMPARABLE = "Incomparable"

    def flipped(self) -> 'PosetRel':
        if self is PosetRel.LESS_STRICT:
            return PosetRel.GREATER_STRICT
        if self is PosetRel.GREATER_STRICT:
            return PosetRel.LESS_STRICT
        return self


def compare(a: CoeffVector, b: CoeffVector) -> PosetRel:
    """Coefficient-wise dominance: LessStrict means a_k <= b_k for all k with at least one strict."""
    if a.n != b.n or len(a.c) != len(b.c):
        raise PosetError(f"Cannot compare coefficient vectors of orders {a.n} and {b.n}")
    below = any(x < y for x, y in zip(a.c, b.c))
    above = any(x > y for x, y in zip(a.c, b.c))
    if below and above:
        return PosetRel.INCOMPARABLE
    if below:
        return PosetRel.LESS_STRICT
    if above:
        return PosetRel.GREATER_STRICT
    return PosetRel.EQUAL


def first_index(a: CoeffVector, b: CoeffVector, strictly_less: bool = True) -> Optional[int]:
    """Smallest k with a_k < b_k (or a_k > b_k when strictly_less is False)."""
    for k, (x, y) in enumerate(zip(a.c, b.c)):
        if (x < y) if strictly_less else (x > y):
            return k
    return None
