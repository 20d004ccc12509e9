import os

import hypothesis
import pytest

from lapco.graphs import FamilySpec, build_u, make_graph
from lapco.poset import enumerate_unicyclic

hypothesis.settings.register_profile("lapco", deadline=None, max_examples=100)
hypothesis.settings.register_profile("fast", deadline=None, max_examples=10)
hypothesis.settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "lapco"))


@pytest.fixture(scope="session")
def g1():
    return build_u(FamilySpec(n=10, l=2, g=3, p=0))


@pytest.fixture(scope="session")
def g2():
    return build_u(FamilySpec(n=10, l=2, g=3, p=1))


@pytest.fixture(scope="session")
def triangle():
    return make_graph(3, [(0, 1), (1, 2), (0, 2)])


@pytest.fixture(scope="session")
def unicyclic_corpus():
    """Every connected unicyclic graph with 3 <= n <= 8, as catalog entries."""
    return [entry for n in range(3, 9) for entry in enumerate_unicyclic(n)]


@pytest.fixture(scope="session")
def unicyclic_corpus_nine():
    """The 240 unicyclic graphs of order 9."""
    return list(enumerate_unicyclic(9))
