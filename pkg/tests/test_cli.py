import json
import math

import pytest

from lapco.core import cli
from lapco.core.app import LabCore
from lapco.core.formats import parse_graph_file, read_graph_file, write_graph_file
from lapco.graphs import FamilySpec, RootedTree, build_u, compose_cycle_trees, is_isomorphic, make_graph, recognize_u
from lapco.poset.verifiers import VerificationReport

G1_STRINGS = ["1", "20", "167", "758", "2036", "3296", "3130", "1612", "382", "30", "0"]
G2_STRINGS = ["1", "20", "168", "770", "2091", "3414", "3243", "1642", "373", "30", "0"]


@pytest.fixture(autouse=True)
def isolated_profile(tmp_path, monkeypatch):
    monkeypatch.setattr(LabCore, "default_config_path", classmethod(lambda cls: tmp_path / "absent.toml"))


@pytest.fixture
def files(tmp_path, g1, g2, triangle):
    branched_tree = make_graph(7, [(0, 1), (1, 2), (1, 3), (0, 4), (4, 5), (4, 6)])
    graphs = {
        "g1": g1,
        "g2": g2,
        "triangle": triangle,
        "spider": make_graph(5, [(0, 1), (1, 2), (0, 3), (0, 4)]),
        "branched": compose_cycle_trees(3, [RootedTree(branched_tree)] + [RootedTree.trivial()] * 2),
    }
    return {name: str(write_graph_file(tmp_path / f"{name}.g", graph)) for name, graph in graphs.items()}


def run(capsys, *argv):
    status = cli.main(list(argv))
    captured = capsys.readouterr()
    return status, captured.out, captured.err


def run_json(capsys, *argv):
    status, out, _ = run(capsys, *argv)
    return status, json.loads(out)


class TestBuild:
    def test_writes_file(self, capsys, tmp_path):
        target = tmp_path / "out" / "u.g"
        status, _, _ = run(capsys, "build", "--family", "u", "--n", "10", "--l", "2", "--g", "3", "--p", "1",
                           "--out", str(target))
        assert status == 0
        assert recognize_u(read_graph_file(target)) == FamilySpec(n=10, l=2, g=3, p=1)

    def test_prints_bst(self, capsys):
        status, out, _ = run(capsys, "build", "--family", "bst", "--n", "7", "--l", "3")
        assert status == 0
        graph = parse_graph_file(out)
        assert graph.n == 7 and graph.m == 6
        assert len(graph.leaves()) == 3

    def test_invalid_family(self, capsys):
        status, _, err = run(capsys, "build", "--n", "5", "--l", "2", "--g", "3", "--p", "1")
        assert status == 2
        assert "lapco: error" in err


class TestCoefficients:
    def test_triangle_with_oracle(self, capsys, files):
        status, document = run_json(capsys, "coeffs", files["triangle"], "--oracle")
        assert status == 0
        assert document["coefficients"] == ["1", "6", "9", "0"]
        assert document["forest_coefficients"] == ["1", "6", "9", "0"]
        assert document["verdict"] == "match"

    def test_family_is_recognised(self, capsys, files):
        status, document = run_json(capsys, "coeffs", files["g2"])
        assert status == 0
        assert document["coefficients"] == G2_STRINGS
        assert document["family"] == {"n": 10, "l": 2, "g": 3, "p": 1}
        assert document["girth"] == 3 and document["leaves"] == 2

    def test_oracle_size_guard(self, capsys, tmp_path):
        path = write_graph_file(tmp_path / "long.g", make_graph(15, [(i, i + 1) for i in range(14)]))
        status, _, err = run(capsys, "coeffs", str(path), "--oracle")
        assert status == 2
        assert "n <= 14" in err

    def test_malformed_file(self, capsys, tmp_path):
        path = tmp_path / "bad.g"
        path.write_text("3 2\n0 1\n", encoding="utf-8")
        status, out, err = run(capsys, "coeffs", str(path))
        assert status == 2
        assert out == ""
        assert "announces 2 edges" in err

    def test_missing_file(self, capsys, tmp_path):
        status, _, _ = run(capsys, "coeffs", str(tmp_path / "nothing.g"))
        assert status == 2


class TestCompareAndLel:
    def test_counterexample_is_incomparable(self, capsys, files):
        status, document = run_json(capsys, "compare", files["g1"], files["g2"])
        assert status == 0
        assert document["relation"] == "Incomparable"
        assert document["first_below"] == 2
        assert document["first_above"] == 8

    def test_orders_must_match(self, capsys, files):
        status, _, _ = run(capsys, "compare", files["g1"], files["triangle"])
        assert status == 2

    def test_lel(self, capsys, files):
        status, document = run_json(capsys, "lel", files["triangle"])
        assert status == 0
        assert document["lel"] == pytest.approx(2 * math.sqrt(3))
        assert document["spectrum"] == pytest.approx([3.0, 3.0, 0.0], abs=1e-9)


class TestTransform:
    def test_xi(self, capsys, files, tmp_path, g1):
        target = tmp_path / "xi.g"
        status, document = run_json(capsys, "transform", files["g2"], "--kind", "xi", "--u", "0", "--v", "3",
                                    "--out", str(target))
        assert status == 0
        assert document["relation"] == "Incomparable"
        assert document["hypothesis"] == {"s": 2, "t": 3, "holds": False}
        assert document["steps"][0]["kind"] == "xi"
        assert is_isomorphic(read_graph_file(target), g1)

    def test_reduce(self, capsys, files):
        status, document = run_json(capsys, "transform", files["branched"], "--kind", "reduce")
        assert status == 0
        assert document["passed"] is True
        assert document["relation"] == "LessStrict"
        assert {step["kind"] for step in document["steps"]} <= {"xi", "path_shift"}

    def test_shift(self, capsys, files):
        status, document = run_json(capsys, "transform", files["spider"], "--kind", "shift", "--v", "0",
                                    "--leaf-p", "2", "--leaf-q", "3")
        assert status == 0
        assert document["relation"] == "GreaterStrict"

    def test_missing_vertex_flag(self, capsys, files):
        status, _, err = run(capsys, "transform", files["g2"], "--kind", "xi", "--u", "0")
        assert status == 2
        assert "--v" in err

    def test_precondition_failure(self, capsys, files):
        status, _, _ = run(capsys, "transform", files["g2"], "--kind", "kappa")
        assert status == 2


class TestEnumerateAndMinimal:
    def test_enumerate_to_directory(self, capsys, tmp_path):
        out_dir = tmp_path / "catalog"
        status, document = run_json(capsys, "enumerate", "--n", "5", "--out", str(out_dir))
        assert status == 0
        assert document["count"] == 5
        names = sorted(p.name for p in out_dir.glob("*.g"))
        assert names == ["0000.g", "0001.g", "0002.g", "0003.g", "0004.g"]
        index = json.loads((out_dir / "index.json").read_text(encoding="utf-8"))
        assert [m["file"] for m in index["members"]] == names
        assert index["parameters"] == {"n": 5, "l": "any", "g": "any", "family": "full"}

    def test_enumerate_filtered(self, capsys):
        status, document = run_json(capsys, "enumerate", "--n", "5", "--l", "2", "--g", "3")
        assert status == 0
        assert document["count"] == 2
        for member in document["members"]:
            assert all(isinstance(c, str) for c in member["coefficients"])

    def test_guard(self, capsys):
        status, _, err = run(capsys, "enumerate", "--n", "13")
        assert status == 2
        assert "n=13" in err

    def test_guard_from_environment(self, capsys, monkeypatch):
        monkeypatch.setenv("LAPCO_MAX_N", "6")
        status, _, _ = run(capsys, "enumerate", "--n", "7")
        assert status == 2

    def test_minimal(self, capsys):
        status, document = run_json(capsys, "minimal", "--n", "7", "--l", "2", "--g", "3")
        assert status == 0
        assert document["family_size"] == 6
        assert len(document["minimal"]) == 1
        assert "lel" in document["minimal"][0]


class TestVerify:
    def test_full_family(self, capsys):
        status, document = run_json(capsys, "verify", "--theorem", "4.3", "--n", "8", "--l", "2")
        assert status == 0
        assert document["status"] == "pass"
        assert document["parameters"]["g"] == 3

    @pytest.mark.slow
    def test_counterexample_order(self, capsys):
        status, document = run_json(capsys, "verify", "--theorem", "4.3", "--n", "10", "--l", "2")
        assert status == 0
        assert len(document["observed_minimal"]) == 2

    def test_incomparable(self, capsys):
        status, document = run_json(capsys, "verify", "--theorem", "incomparable", "--n", "10", "--l", "2",
                                    "--g", "3", "--p", "1", "--q", "0")
        assert status == 0
        assert document["band"] == [2, 5]

    def test_girth_mismatch(self, capsys):
        status, _, err = run(capsys, "verify", "--theorem", "4.6", "--n", "9", "--l", "2", "--g", "3")
        assert status == 2
        assert "girth 4" in err

    def test_needs_leaf_count(self, capsys):
        status, _, _ = run(capsys, "verify", "--theorem", "3.3", "--n", "8")
        assert status == 2

    def test_failed_report_exits_one(self, capsys, monkeypatch):
        failing = VerificationReport(name="stub", parameters={})
        failing.check("always fails", False)
        monkeypatch.setattr(LabCore, "verify", lambda self, *args, **kwargs: failing)
        status, document = run_json(capsys, "verify", "--theorem", "3.3", "--n", "8", "--l", "2")
        assert status == 1
        assert document["status"] == "fail"


class TestCounterexample:
    def test_regenerates_polynomials(self, capsys):
        status, document = run_json(capsys, "counterexample")
        assert status == 0
        assert [g["coefficients"] for g in document["graphs"]] == [G1_STRINGS, G2_STRINGS]
        assert document["relation"] == "Incomparable"
        assert document["witnesses"]["c_n_minus_2"] == 8
        assert 2 in document["witnesses"]["band_witnesses"]
        assert document["passed"] is True

    def test_coefficient_strings_parse_back(self, capsys):
        _, document = run_json(capsys, "counterexample")
        for graph, spec in zip(document["graphs"], (FamilySpec(10, 2, 3, 0), FamilySpec(10, 2, 3, 1))):
            values = [int(c) for c in graph["coefficients"]]
            assert values[1] == 2 * graph["graph"]["m"]
            assert graph["family"] == {"n": spec.n, "l": spec.l, "g": spec.g, "p": spec.p}
            assert make_graph(10, graph["graph"]["edges"]).edges == build_u(spec).edges


class TestTopLevel:
    def test_unknown_subcommand(self, capsys):
        status, _, _ = run(capsys, "plot")
        assert status == 2

    def test_no_subcommand(self, capsys):
        status, _, _ = run(capsys)
        assert status == 2

    def test_unexpected_error_exits_one(self, capsys, monkeypatch, files):
        def explode(self, graph):
            raise RuntimeError("boom")

        monkeypatch.setattr(LabCore, "lel_document", explode)
        status, _, err = run(capsys, "lel", files["triangle"])
        assert status == 1
        assert "boom" in err

    def test_explicit_missing_config(self, capsys, tmp_path, files):
        status, _, _ = run(capsys, "--config", str(tmp_path / "nope.toml"), "lel", files["triangle"])
        assert status == 2
