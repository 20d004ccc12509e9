import pytest

from lapco.core.formats import (
    GraphFileError,
    format_graph_file,
    parse_graph_file,
    read_graph_file,
    write_graph_file,
)
from lapco.graphs import FamilySpec, build_u, classify, recognize_u


def test_parse_skips_comments_and_blank_lines():
    text = "# triangle\n\n3 3\n0 1\n# middle\n1 2\n0 2\n\n"
    graph = parse_graph_file(text)
    assert graph.n == 3 and graph.m == 3
    assert classify(graph).girth == 3


@pytest.mark.parametrize("text, message", [
    ("", "missing"),
    ("# only a comment\n", "missing"),
    ("3 2\n0 1\n", "announces 2 edges, found 1"),
    ("3 1\n0 1 2\n", "two integers"),
    ("3 1\n0 x\n", "two integers"),
    ("3 1\n1 1\n", "Self-loop"),
    ("3 2\n0 1\n1 0\n", "Duplicate"),
    ("3 1\n0 3\n", "outside"),
])
def test_malformed_files(text, message):
    with pytest.raises(GraphFileError, match=message):
        parse_graph_file(text, source="bad.g")


def test_round_trip_reproduces_family(tmp_path):
    spec = FamilySpec(n=11, l=3, g=4, p=0)
    graph = build_u(spec)
    path = write_graph_file(tmp_path / "nested" / "u.g", graph, comment="u n=11")
    assert path.read_text().startswith("# u n=11\n11 11\n")
    parsed = read_graph_file(path)
    assert parsed.edges == graph.edges
    assert recognize_u(parsed) == spec


def test_format_without_comment():
    assert format_graph_file(build_u(FamilySpec(n=4, l=1, g=3))) == "4 4\n0 1\n0 2\n0 3\n1 2\n"


def test_missing_file(tmp_path):
    with pytest.raises(GraphFileError, match="Cannot read"):
        read_graph_file(tmp_path / "absent.g")
