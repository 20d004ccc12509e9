# src/lapco/core/formats.py
import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional

from ..graphs.graph import Graph, GraphError, make_graph

logger = logging.getLogger(__name__)

GRAPH_SUFFIX = ".g"


class GraphFileError(ValueError):
    """Malformed GraphFile text."""
    pass


def parse_graph_file(text: str, source: str = "<text>") -> Graph:
    """
    Parses the GraphFile format: a header line "n m" followed by m lines "u v" with
    0-based vertices. Blank lines and lines starting with '#' are ignored.
    """
    rows: List[List[int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphFileError(f"{source}:{lineno}: expected two integers, got {line!r}")
        try:
            rows.append([int(parts[0]), int(parts[1])])
        except ValueError as e:
            raise GraphFileError(f"{source}:{lineno}: expected two integers, got {line!r}") from e
    if not rows:
        raise GraphFileError(f"{source}: missing 'n m' header")
    # first non-comment row is the header
    (n, m), edges = rows[0], rows[1:]
    if len(edges) != m:
        raise GraphFileError(f"{source}: header announces {m} edges, found {len(edges)}")
    try:
        return make_graph(n, edges)
    except GraphError as e:
        raise GraphFileError(f"{source}: {e}") from e


def read_graph_file(path: Path) -> Graph:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise GraphFileError(f"Cannot read graph file {path}: {e}") from e
    return parse_graph_file(text, source=str(path))


def format_graph_file(graph: Graph, comment: Optional[str] = None) -> str:
    lines = [f"# {comment}"] if comment else []
    lines.append(f"{graph.n} {graph.m}")
    lines.extend(f"{u} {v}" for u, v in graph.edges)
    return "\n".join(lines) + "\n"


def write_graph_file(path: Path, graph: Graph, comment: Optional[str] = None) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(format_graph_file(graph, comment), encoding="utf-8")
    logger.debug(f"Wrote {graph} to {path}")
    return path


def dumps_document(document: Dict[str, Any]) -> str:
    """JSON report text; coefficient integers are expected to be strings already."""
    return json.dumps(document, indent=2, sort_keys=False)


def write_document(path: Path, document: Dict[str, Any]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dumps_document(document) + "\n", encoding="utf-8")
    return path
