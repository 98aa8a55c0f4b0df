import pytest
from hypothesis import given, settings, strategies as st

from bichain.errors import PreconditionError
from bichain.graph import Graph, cycle_graph, path_graph, random_graph
from bichain.grids import x_grid, y_grid
from bichain.transforms import (SplitPartition, bipartite_split_transform, bottom_row_schedule,
                                local_complement, pivot, pivot_by_local_complements, pivot_by_three_sets,
                                pivot_toggle, pivot_x_to_y, pivot_y_to_x, split_bipartite_transform,
                                split_partitions)
from test_graph import graphs


def test_local_complement_of_star_centre_is_clique():
    star = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    assert local_complement(star, 0).num_edges == 6
    assert local_complement(local_complement(star, 0), 0) == star


def test_local_complement_of_p3_end():
    assert local_complement(path_graph(3), 0) == path_graph(3)


@settings(max_examples=200, deadline=None)
@given(graphs(7), st.data())
def test_pivot_forms_agree(G, data):
    if not G.num_edges:
        return
    u, v = data.draw(st.sampled_from(G.edges()))
    assert pivot_by_three_sets(G, u, v) == pivot_by_local_complements(G, u, v)
    assert pivot(G, u, v) == pivot(G, v, u)
    assert pivot_toggle(pivot_toggle(G, u, v), u, v) == G


def test_pivot_needs_edge():
    with pytest.raises(PreconditionError):
        pivot(path_graph(3), 0, 2)


def test_schedule_is_right_to_left():
    assert bottom_row_schedule(2) == [(8, 12), (0, 4)]


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_pivot_x_to_y_exact(n):
    G, trace = pivot_x_to_y(n, keep_graphs=True)
    assert G == y_grid(2 * n, 2 * n).graph
    assert len(trace.graphs) == n
    assert pivot_y_to_x(G, n) == x_grid(2 * n, 2 * n).graph


def test_with_end_swap_the_grids_differ():
    # a true pivot also swaps the two end vertices; that is not the Y-grid labelling
    G = x_grid(4, 4).graph
    for u, v in bottom_row_schedule(2):
        G = pivot(G, u, v)
    assert G != y_grid(4, 4).graph


def test_split_bipartite_round_trip(rng):
    for _ in range(50):
        G = random_graph(7, 0.5, rng)
        for P in split_partitions(G):
            star = split_bipartite_transform(G, P)
            assert star.is_bipartite()
            assert bipartite_split_transform(star, P.as_bipartition(), 0) == G


def test_split_partitions_bruteforce_counts():
    assert len(split_partitions(path_graph(4))) == 1
    assert len(split_partitions(Graph.from_edges(2, [(0, 1)]))) == 3
    assert split_partitions(cycle_graph(4)) == []


def test_split_partition_validation():
    with pytest.raises(Exception):
        SplitPartition([0, 2], [1]).validate(path_graph(3))
