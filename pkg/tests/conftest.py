import networkx as nx
import pytest


def to_nx(G):
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(G.edges())
    return H


def nx_contains(G, H):
    """Independent induced-subgraph oracle."""
    return nx.algorithms.isomorphism.GraphMatcher(to_nx(G), to_nx(H)).subgraph_is_isomorphic()


@pytest.fixture
def rng():
    import random
    return random.Random(12345)
