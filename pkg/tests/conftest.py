import pytest

import oracles


@pytest.fixture(scope="session")
def corpus():
    """Connected simple graphs, n <= 5 and <= 8 edges, up to isomorphism."""
    return oracles.connected_graph_corpus(max_n=5, max_edges=8)
