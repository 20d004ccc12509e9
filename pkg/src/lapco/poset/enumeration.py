# src/lapco/poset/enumeration.py
import logging
from concurrent.futures import ProcessPoolExecutor
from itertools import product
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from ..graphs.families import compose_cycle_trees
from ..utils.config_loader import enumeration_limit
from .catalog import CatalogEntry, FamilyCatalog, make_entry
from .trees import rooted_shapes, shape_leaves, shape_to_tree

logger = logging.getLogger(__name__)

Task = Tuple[int, int, int, Optional[int]]

_CACHE: Dict[Tuple[int, int, Optional[int]], Tuple[CatalogEntry, ...]] = {}


class EnumerationGuardError(ValueError):
    """Requested order outside the enumeration guard."""
    pass


def _compositions(n: int, parts: int, first: int) -> Iterator[Tuple[int, ...]]:
    """Compositions of n into `parts` positive parts starting with `first`, no part below `first`."""
    def extend(prefix: Tuple[int, ...], remaining: int, slots: int) -> Iterator[Tuple[int, ...]]:
        if slots == 0:
            if remaining == 0:
                yield prefix
            return
        for size in range(first, remaining - first * (slots - 1) + 1):
            yield from extend(prefix + (size,), remaining - size, slots - 1)

    if n - first >= first * (parts - 1):
        yield from extend((first,), n - first, parts - 1)


def _dihedral_minimal(keys: Sequence) -> bool:
    g = len(keys)
    seq = tuple(keys)
    mirrored = seq[::-1]
    for shift in range(g):
        if seq[shift:] + seq[:shift] < seq or mirrored[shift:] + mirrored[:shift] < seq:
            return False
    return True


def _build_task(task: Task) -> List[CatalogEntry]:
    """Every unicyclic graph with girth g whose dihedral-minimal tree sequence starts with a tree of `first` vertices."""
    n, g, first, leaves = task
    entries: List[CatalogEntry] = []
    for sizes in _compositions(n, g, first):
        for shapes in product(*(rooted_shapes(size) for size in sizes)):
            if leaves is not None and sum(shape_leaves(s) for s in shapes) != leaves:
                continue
            if not _dihedral_minimal([(size, shape) for size, shape in zip(sizes, shapes)]):
                continue
            graph = compose_cycle_trees(g, [shape_to_tree(s) for s in shapes])
            entries.append(make_entry(graph, girth=g, attachments=sum(1 for s in shapes if s)))
    return entries


def _tasks(n: int, g: int, leaves: Optional[int]) -> List[Task]:
    return [(n, g, first, leaves) for first in range(1, n // g + 1)]


def _girth_entries(n: int, g: int, leaves: Optional[int], workers: int) -> Tuple[CatalogEntry, ...]:
    key = (n, g, leaves)
    if key in _CACHE:
        return _CACHE[key]
    tasks = _tasks(n, g, leaves)
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(workers) as pool:
            chunks = list(pool.map(_build_task, tasks))
    else:
        chunks = [_build_task(task) for task in tasks]
    merged: Dict[bytes, CatalogEntry] = {}
    for chunk in chunks:
        for entry in chunk:
            merged.setdefault(entry.form, entry)
    entries = tuple(sorted(merged.values(), key=lambda entry: entry.form))
    _CACHE[key] = entries
    logger.debug(f"Girth {g}, n={n}, leaves={leaves}: {len(entries)} graphs")
    return entries


def clear_catalog_cache() -> None:
    _CACHE.clear()


def check_guard(n: int, max_n: Optional[int] = None) -> None:
    limit = enumeration_limit(max_n)
    if not 3 <= n <= limit:
        raise EnumerationGuardError(f"Enumeration needs 3 <= n <= {limit}, got n={n}")


def enumerate_unicyclic(n: int, l: Optional[int] = None, g: Optional[int] = None,
                        attachments: Optional[int] = None, workers: int = 1,
                        max_n: Optional[int] = None) -> FamilyCatalog:
    """
    All connected unicyclic graphs of order n up to isomorphism, optionally filtered by
    leaf count, girth and number of cycle vertices carrying a nontrivial tree.
    Members are sorted by canonical form, so the result does not depend on `workers`.
    """
    check_guard(n, max_n)
    girths = [g] if g is not None else list(range(3, n + 1))
    merged: Dict[bytes, CatalogEntry] = {}
    for girth in girths:
        if not 3 <= girth <= n:
            continue
        for entry in _girth_entries(n, girth, l, workers):
            if attachments is None or entry.attachments == attachments:
                merged.setdefault(entry.form, entry)
    members = tuple(sorted(merged.values(), key=lambda entry: entry.form))
    label = "full" if attachments is None else f"attachments={attachments}"
    logger.info(f"Catalog n={n} l={l} g={g} {label}: {len(members)} graphs")
    return FamilyCatalog(n=n, l=l, g=g, label=label, members=members)
