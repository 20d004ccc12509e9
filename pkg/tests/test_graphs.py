from collections import Counter
from itertools import permutations, product

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from lapco.graphs import (
    DuplicateEdgeError,
    FamilySpec,
    FamilySpecError,
    GraphError,
    RootedTree,
    SelfLoopError,
    VertexRangeError,
    build_bst,
    build_u,
    canonical_form,
    canonical_graph,
    classify,
    compose_cycle_trees,
    cycle_graph,
    from_networkx,
    is_isomorphic,
    make_graph,
    max_minimal_tail,
    path_graph,
    pendant_paths,
    recognize_u,
    star_graph,
    unicyclic_layout,
)
from lapco.graphs.canonical import _refine
from lapco.graphs.families import bst_leg_lengths
from lapco.poset import enumerate_unicyclic, rooted_shapes, shape_to_tree


@st.composite
def relabelled(draw, graph):
    perm = draw(st.permutations(range(graph.n)))
    return graph.relabel(perm)


class TestMakeGraph:
    def test_edges_are_normalised_and_sorted(self):
        g = make_graph(4, [(3, 2), (1, 0), (2, 1)])
        assert g.edges == ((0, 1), (1, 2), (2, 3))
        assert g.m == 3
        assert g.degrees() == [1, 2, 2, 1]
        assert g.leaves() == [0, 3]

    def test_self_loop(self):
        with pytest.raises(SelfLoopError):
            make_graph(3, [(0, 1), (2, 2)])

    def test_duplicate_edge_in_either_direction(self):
        with pytest.raises(DuplicateEdgeError):
            make_graph(3, [(0, 1), (1, 0)])

    @pytest.mark.parametrize("n, edges", [(3, [(0, 3)]), (3, [(-1, 1)]), (0, [])])
    def test_vertex_range(self, n, edges):
        with pytest.raises(VertexRangeError):
            make_graph(n, edges)

    def test_errors_share_a_base(self):
        assert issubclass(SelfLoopError, GraphError)
        assert issubclass(GraphError, ValueError)

    def test_with_edges_rejects_absent_edges(self):
        g = path_graph(4)
        with pytest.raises(GraphError):
            g.with_edges(removed=[(0, 2)])
        moved = g.with_edges(removed=[(2, 3)], added=[(0, 3)])
        assert moved.has_edge(0, 3) and not moved.has_edge(2, 3)

    def test_networkx_round_trip(self):
        g = build_u(FamilySpec(n=8, l=2, g=4, p=1))
        assert from_networkx(g.to_networkx()).edges == g.edges


class TestClassify:
    def test_cycle(self):
        report = classify(cycle_graph(5))
        assert report.is_unicyclic and not report.is_tree
        assert report.girth == 5
        assert report.cycle_vertices == (0, 1, 2, 3, 4)
        assert report.leaf_count == 0

    def test_path(self):
        report = classify(path_graph(4))
        assert report.is_tree and report.connected
        assert report.girth is None
        assert report.leaf_count == 2

    def test_disconnected(self):
        report = classify(make_graph(4, [(0, 1), (2, 3)]))
        assert not report.connected
        assert not report.is_tree and not report.is_unicyclic

    def test_girth_of_complete_graph(self):
        k4 = make_graph(4, [(i, j) for i in range(4) for j in range(i + 1, 4)])
        report = classify(k4)
        assert report.girth == 3
        assert not report.is_unicyclic

    def test_layout_of_counterexample(self, g2):
        layout = unicyclic_layout(g2)
        assert layout.girth == 3
        assert layout.nontrivial_roots() == [0]
        assert layout.branch_points(0) == [3]
        assert layout.depth[3] == 1
        assert layout.height(0) == 4
        assert layout.tree_size(0) == 8

    def test_layout_rejects_trees(self):
        with pytest.raises(GraphError):
            unicyclic_layout(path_graph(5))

    def test_pendant_paths_longest_first(self, g1):
        paths = pendant_paths(g1, 0)
        assert [p.length for p in paths] == [4, 3]
        assert paths[0].leaf == 6 and paths[1].leaf == 9


class TestFamilies:
    @pytest.mark.parametrize("n, l, legs", [(7, 3, [2, 2, 2]), (8, 3, [3, 2, 2]), (5, 4, [1, 1, 1, 1])])
    def test_bst_leg_lengths(self, n, l, legs):
        assert bst_leg_lengths(n, l) == legs
        g = build_bst(n, l)
        assert g.n == n and classify(g).is_tree
        assert len(g.leaves()) == l

    @pytest.mark.parametrize("n, l, legs", [(7, 2, [3, 3]), (8, 2, [4, 3]), (5, 3, [2, 1, 1])])
    def test_bst_documented_shapes(self, n, l, legs):
        g = build_bst(n, l)
        assert [p.length for p in pendant_paths(g, 0)] == legs
        assert g.degree(0) == l

    def test_bst_with_one_leg_is_a_path(self):
        assert is_isomorphic(build_bst(6, 1), path_graph(6))

    @given(data=st.data())
    def test_bst_leg_multiset(self, data):
        l = data.draw(st.integers(min_value=1, max_value=7))
        n = data.draw(st.integers(min_value=l + 1, max_value=24))
        g = build_bst(n, l)
        short, extra = (n - 1) // l, (n - 1) % l
        legs = Counter(p.length for p in pendant_paths(g, 0))
        expected = Counter({short: l - extra})
        expected[short + 1] += extra
        assert legs == +expected
        assert g.n == n and classify(g).is_tree
        assert len(g.leaves()) == max(l, 2)

    def test_bst_too_small(self):
        with pytest.raises(FamilySpecError):
            build_bst(3, 3)

    def test_counterexample_shapes(self, g1, g2):
        assert (g1.n, g1.m, len(g1.leaves())) == (10, 10, 2)
        assert g1.degree(0) == 4
        assert g2.degree(0) == 3 and g2.degree(3) == 3
        assert classify(g2).girth == 3

    @pytest.mark.parametrize("spec", [
        FamilySpec(n=6, l=2, g=3, p=-1),
        FamilySpec(n=6, l=0, g=3, p=0),
        FamilySpec(n=6, l=2, g=2, p=0),
        FamilySpec(n=5, l=2, g=3, p=1),
    ])
    def test_invalid_specs(self, spec):
        with pytest.raises(FamilySpecError):
            build_u(spec)

    @pytest.mark.parametrize("spec", [
        FamilySpec(n=10, l=2, g=3, p=0),
        FamilySpec(n=10, l=2, g=3, p=1),
        FamilySpec(n=9, l=3, g=4, p=0),
        FamilySpec(n=11, l=2, g=3, p=2),
        FamilySpec(n=6, l=2, g=3, p=1),
        FamilySpec(n=12, l=4, g=5, p=1),
    ])
    def test_recognize_round_trip(self, spec):
        assert recognize_u(build_u(spec)) == spec

    def test_recognize_single_leg_reports_no_tail(self):
        assert recognize_u(build_u(FamilySpec(n=7, l=1, g=3, p=2))) == FamilySpec(n=7, l=1, g=3, p=0)

    def test_recognize_rejects_other_graphs(self):
        assert recognize_u(cycle_graph(5)) is None
        assert recognize_u(path_graph(5)) is None
        two_trees = compose_cycle_trees(3, [RootedTree(path_graph(2)), RootedTree(path_graph(2)), RootedTree.trivial()])
        assert recognize_u(two_trees) is None
        spider = compose_cycle_trees(3, [RootedTree(build_bst(5, 2), root=0)] + [RootedTree.trivial()] * 2)
        assert recognize_u(spider) == FamilySpec(n=7, l=2, g=3, p=0)
        lopsided = compose_cycle_trees(3, [RootedTree(make_graph(5, [(0, 1), (1, 2), (2, 3), (0, 4)]))]
                                       + [RootedTree.trivial()] * 2)
        assert recognize_u(lopsided) is None

    def test_max_minimal_tail(self):
        assert max_minimal_tail(10, 2, 3) == 1
        assert max_minimal_tail(11, 2, 4) == 0
        assert max_minimal_tail(7, 1, 5) == -1

    def test_compose_cycle_trees(self):
        g = compose_cycle_trees(4, [RootedTree(star_graph(2), root=0)] + [RootedTree.trivial()] * 3)
        assert g.n == 6 and g.m == 6
        assert g.degree(0) == 4
        with pytest.raises(FamilySpecError):
            compose_cycle_trees(4, [RootedTree.trivial()] * 3)
        with pytest.raises(FamilySpecError):
            compose_cycle_trees(3, [RootedTree(cycle_graph(3))] + [RootedTree.trivial()] * 2)


class TestCanonicalForm:
    @given(data=st.data())
    def test_invariant_under_relabelling(self, data, g1, g2):
        for graph in (g1, g2, build_bst(9, 3), cycle_graph(6)):
            other = data.draw(relabelled(graph))
            assert canonical_form(other) == canonical_form(graph)
            assert canonical_graph(other).edges == canonical_graph(graph).edges

    def test_distinguishes_counterexample(self, g1, g2):
        assert canonical_form(g1) != canonical_form(g2)
        assert not is_isomorphic(g1, g2)

    def test_key_layout(self, triangle):
        form = canonical_form(triangle)
        assert form[:2] == (3).to_bytes(2, "big")
        assert form[2:] == bytes([0b11100000])

    def test_path_key(self):
        assert canonical_form(path_graph(3)) == (3).to_bytes(2, "big") + bytes([0b01100000])

    def test_key_is_smallest_cell_respecting_code(self):
        graphs = [from_networkx(h) for h in nx.graph_atlas_g()[1:] if 3 <= h.number_of_nodes() <= 6]
        for graph in graphs:
            cells = _refine(graph)
            codes = []
            for choice in product(*(permutations(cell) for cell in cells)):
                order = [v for part in choice for v in part]
                codes.append(tuple(
                    int(graph.has_edge(order[i], order[j])) for j in range(1, graph.n) for i in range(j)
                ))
            best = min(codes)
            value = int("".join(map(str, best)) or "0", 2) << ((len(best) + 7) // 8 * 8 - len(best))
            expected = graph.n.to_bytes(2, "big") + value.to_bytes((len(best) + 7) // 8, "big")
            assert canonical_form(graph) == expected, graph

    def test_rooted_shapes_collapse_to_free_trees(self):
        forms = {canonical_form(shape_to_tree(s).tree) for s in rooted_shapes(7)}
        # 48 rooted trees on 7 vertices collapse to 11 free trees
        assert len(forms) == 11

    @pytest.mark.parametrize("n, expected", [(3, 1), (4, 2), (5, 5), (6, 13), (7, 33)])
    def test_enumeration_matches_graph_atlas(self, n, expected):
        atlas = {
            canonical_form(from_networkx(h))
            for h in nx.graph_atlas_g()
            if h.number_of_nodes() == n and h.number_of_edges() == n and nx.is_connected(h)
        }
        catalog = enumerate_unicyclic(n)
        assert len(atlas) == expected == len(catalog)
        assert atlas == set(catalog.forms())

    def test_girth_distribution_of_order_six(self):
        counts = Counter(classify(entry.graph).girth for entry in enumerate_unicyclic(6))
        assert counts == {3: 7, 4: 4, 5: 1, 6: 1}
