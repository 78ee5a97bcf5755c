import itertools
from pathlib import Path

import pytest
from hypothesis import strategies as st

from romank.graph import Graph
from romank.weights import Variant

FIXTURES = Path(__file__).parent / "fixtures"


@st.composite
def graphs(draw, min_vertices=1, max_vertices=6):
    n = draw(st.integers(min_vertices, max_vertices))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


@st.composite
def graph_and_function(draw, max_vertices=6, max_k=5):
    g = draw(graphs(max_vertices=max_vertices))
    k = draw(st.integers(1, max_k))
    vals = draw(st.lists(st.integers(0, k), min_size=g.n, max_size=g.n))
    return g, k, vals


def all_labelled_graphs(n):
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(n, [p for i, p in enumerate(pairs) if mask >> i & 1])


def brute_min(g, k, ok):
    """Minimum weight over f: V -> {0..k} with ok(f); plain itertools scan."""
    best = None
    for f in itertools.product(range(k + 1), repeat=g.n):
        if (best is None or sum(f) < best) and ok(f):
            best = sum(f)
    return best


@pytest.fixture(scope="session")
def fixtures_dir():
    return FIXTURES


variants = pytest.mark.parametrize("variant", list(Variant), ids=lambda v: v.value)
