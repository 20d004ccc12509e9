import math

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, strategies as st

from lapco.forests import spanning_tree_count
from lapco.graphs import NotATreeError, from_networkx, make_graph, path_graph, star_graph
from lapco.spectra import CoeffVector, laplacian_coefficients, laplacian_spectrum, lel, wiener_index

G1_COEFFS = [1, 20, 167, 758, 2036, 3296, 3130, 1612, 382, 30, 0]
G2_COEFFS = [1, 20, 168, 770, 2091, 3414, 3243, 1642, 373, 30, 0]


@st.composite
def random_trees(draw, min_n=3, max_n=9):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    sequence = draw(st.lists(st.integers(min_value=0, max_value=n - 1), min_size=n - 2, max_size=n - 2))
    return from_networkx(nx.from_prufer_sequence(sequence))


class TestCoefficients:
    def test_counterexample_polynomials(self, g1, g2):
        assert list(laplacian_coefficients(g1).c) == G1_COEFFS
        assert list(laplacian_coefficients(g2).c) == G2_COEFFS

    @pytest.mark.parametrize("graph, expected", [
        (make_graph(3, [(0, 1), (1, 2), (0, 2)]), [1, 6, 9, 0]),
        (path_graph(4), [1, 6, 10, 4, 0]),
        (path_graph(3), [1, 4, 3, 0]),
        (make_graph(1, []), [1, 0]),
        (make_graph(3, []), [1, 0, 0, 0]),
    ])
    def test_small_graphs(self, graph, expected):
        assert list(laplacian_coefficients(graph).c) == expected

    def test_identities_on_unicyclic_corpus(self, unicyclic_corpus):
        for entry in unicyclic_corpus:
            graph, c = entry.graph, entry.coeffs
            n = graph.n
            assert c[0] == 1 and c[n] == 0
            assert c[1] == 2 * graph.m
            assert c[n - 1] == n * spanning_tree_count(graph) == n * entry.girth
            assert all(x > 0 for x in c.c[:n])

    @given(random_trees())
    def test_wiener_identity_on_trees(self, tree):
        c = laplacian_coefficients(tree)
        assert c[tree.n - 2] == wiener_index(tree)
        assert c[tree.n - 1] == tree.n

    def test_coefficient_vector_contract(self):
        with pytest.raises(ValueError):
            CoeffVector(n=3, c=(1, 6, 9))
        vector = CoeffVector.from_values(["1", "6", "9", "0"])
        assert vector.n == 3 and vector.total() == 16
        assert vector.to_strings() == ["1", "6", "9", "0"]
        assert len(vector) == 4 and vector[2] == 9

    def test_big_coefficients_stay_exact(self):
        c = laplacian_coefficients(path_graph(30))
        # the product of the nonzero eigenvalues of P_n is n
        assert c[29] == 30
        assert CoeffVector.from_values(c.to_strings()) == c


class TestSpectrum:
    def test_star(self):
        spectrum = laplacian_spectrum(star_graph(3))
        assert spectrum.mu == pytest.approx((4.0, 1.0, 1.0, 0.0), abs=1e-9)
        assert spectrum.mu[-1] == 0.0
        assert lel(star_graph(3)) == pytest.approx(4.0)

    def test_triangle(self, triangle):
        assert laplacian_spectrum(triangle).mu == pytest.approx((3.0, 3.0, 0.0), abs=1e-9)
        assert lel(triangle) == pytest.approx(2 * math.sqrt(3))

    def test_single_edge(self):
        assert laplacian_spectrum(path_graph(2)).mu == pytest.approx((2.0, 0.0), abs=1e-12)

    def test_non_increasing(self, g1):
        mu = laplacian_spectrum(g1).mu
        assert list(mu) == sorted(mu, reverse=True)
        assert mu[-1] == 0.0

    def test_elementary_symmetric_matches_coefficients(self, g1, g2):
        for graph in (g1, g2):
            spectrum = laplacian_spectrum(graph)
            c = laplacian_coefficients(graph)
            for k in range(graph.n):
                assert spectrum.elementary_symmetric(k) == pytest.approx(c[k], rel=1e-8)

    def test_spectrum_agrees_with_exact_coefficients_on_corpus(self, unicyclic_corpus):
        for entry in unicyclic_corpus:
            spectrum = laplacian_spectrum(entry.graph)
            c = entry.coeffs
            n = entry.graph.n
            for k in range(n):
                assert spectrum.elementary_symmetric(k) == pytest.approx(c[k], rel=1e-6), (n, k)
            # det(xI - L) = sum (-1)^k c_k x^{n-k}
            signed = [(-1) ** k * c[k] for k in range(n + 1)]
            assert list(np.poly(spectrum.mu)) == pytest.approx(signed, rel=1e-6, abs=1e-6)


class TestWiener:
    @pytest.mark.parametrize("graph, expected", [(path_graph(4), 10), (star_graph(3), 9), (path_graph(1), 0)])
    def test_known_values(self, graph, expected):
        assert wiener_index(graph) == expected

    def test_rejects_cycles(self, triangle):
        with pytest.raises(NotATreeError):
            wiener_index(triangle)
