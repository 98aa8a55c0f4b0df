import networkx as nx
import pytest
from hypothesis import given, settings

from bichain.errors import CapacityError
from bichain.graph import Graph, all_graphs, complete_graph, cycle_graph, path_graph, random_graph
from bichain.grids import chain_universal
from bichain.transforms import local_complement, pivot
from bichain.width import (CliqueWidthExpression, chain_3expression, clique_width, clique_width_expression,
                           cutrank, gf2_rank, has_k_expression, layout_width, rank_decomposition, rank_width)
from conftest import nx_contains
from oracles import clique_width_generic
from test_graph import graphs


def _from_nx(H):
    H = nx.convert_node_labels_to_integers(H)
    return Graph.from_edges(H.number_of_nodes(), H.edges())


HOUSE = _from_nx(nx.house_graph())
GEM = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (4, 0), (4, 1), (4, 2), (4, 3)])
DOMINO = _from_nx(nx.grid_2d_graph(2, 3))
DH_OBSTRUCTIONS = [HOUSE, GEM, DOMINO, cycle_graph(5), cycle_graph(6), cycle_graph(7)]


def test_gf2_rank():
    assert gf2_rank([0b11, 0b01, 0b10]) == 2
    assert gf2_rank([]) == 0
    assert cutrank(path_graph(4), [0, 1]) == 1
    assert cutrank(cycle_graph(4), [0, 2]) == 1


def test_known_rank_widths():
    assert rank_width(Graph.empty(3)) == 0
    assert rank_width(complete_graph(5)) == 1
    assert rank_width(path_graph(6)) == 1
    assert rank_width(cycle_graph(5)) == 2
    assert rank_width(_from_nx(nx.grid_2d_graph(3, 3))) == 2


def test_rank_width_one_is_distance_hereditary():
    for n in range(2, 8):
        for G in all_graphs(n):
            dh = not any(nx_contains(G, F) for F in DH_OBSTRUCTIONS if F.n <= n)
            r = rank_width(G)
            if G.num_edges == 0:
                assert r == 0
            else:
                assert (r == 1) == dh


def test_rank_decomposition_layout_realises_width(rng):
    for _ in range(30):
        G = random_graph(rng.randint(2, 8), 0.5, rng)
        w, layout = rank_decomposition(G)
        assert layout_width(G, layout) == w


def test_rank_width_ceiling():
    with pytest.raises(CapacityError):
        rank_width(Graph.empty(15))


def _is_cograph(G):
    return not nx_contains(G, path_graph(4))


PRISM = cycle_graph(6).complement()


def test_clique_width_matches_generic_search():
    for n in range(1, 6):
        for G in all_graphs(n):
            assert clique_width(G) == clique_width_generic(G)
    assert clique_width_generic(PRISM) == 4
    assert clique_width_generic(cycle_graph(6)) == 3


def test_clique_width_six_vertices():
    # lower bounds: edgeless / cograph tests, and the generic search for the prism;
    # upper bounds: the returned expression evaluates to G
    fours = []
    for G in all_graphs(6):
        expr = clique_width_expression(G)
        assert expr.to_graph() == G and expr.is_valid()
        floor = 1 if G.num_edges == 0 else 2 if _is_cograph(G) else 3
        assert expr.k >= floor
        if expr.k > floor:
            fours.append(G)
    assert len(fours) == 1 and fours[0].n == 6 and clique_width(fours[0]) == 4
    from bichain.graph import are_isomorphic
    assert are_isomorphic(fours[0], PRISM)


def test_known_clique_widths():
    assert clique_width(cycle_graph(5)) == 3
    assert clique_width(cycle_graph(6)) == 3
    assert clique_width(path_graph(7)) == 3
    assert clique_width(complete_graph(4)) == 2
    assert not has_k_expression(path_graph(4), 2)
    assert has_k_expression(path_graph(4), 3)


def test_expression_json_round_trip():
    expr = clique_width_expression(cycle_graph(5))
    back = CliqueWidthExpression.from_json(expr.to_json(), expr.k)
    assert back.to_graph() == cycle_graph(5)


@pytest.mark.parametrize("n", range(1, 13))
def test_chain_3expression(n):
    expr = chain_3expression(n)
    assert expr.to_graph() == chain_universal(n)[0]
    assert expr.labels_used() <= {1, 2, 3}


def test_chain_graphs_have_clique_width_three():
    assert [clique_width(chain_universal(n)[0]) for n in range(1, 5)] == [2, 3, 3, 3]


@settings(max_examples=40, deadline=None)
@given(graphs(6))
def test_rank_width_is_vertex_minor_invariant(G):
    r = rank_width(G)
    for v in range(G.n):
        assert rank_width(local_complement(G, v)) == r
    for u, v in G.edges():
        assert rank_width(pivot(G, u, v)) == r


@settings(max_examples=40, deadline=None)
@given(graphs(6))
def test_sandwich(G):
    if G.n == 0:
        return
    r, c = rank_width(G), clique_width(G)
    assert r <= c <= 2 ** (r + 1) - 1
