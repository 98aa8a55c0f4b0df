
import pytest
from hypothesis import given, settings

from bichain.errors import GraphInputError
from bichain.graph import (Embedding, Graph, LabelledGraph, LabelPoset, TRIVIAL_POSET, find_embedding,
                           iter_embeddings, path_graph)
from bichain.grids import chain_universal, s_circ, s_graph, t_circ, x_grid, z_grid
from bichain.wqo import (aligned_square, canonically_prime_bichain_graphs, columns_occupied,
                         embed_in_bounded_columns, interval_report, is_interval, labelled_embeds,
                         minimal_column_width, s_pairs_consecutive, verify_antichain,
                         x_embedding_column_structure)
from test_graph import graphs


def test_labelled_identity():
    L = s_circ(4)
    e = labelled_embeds(L, L)
    assert e is not None and e.is_induced(L.graph, L.graph)


def test_s_circ_pair_does_not_embed_but_unlabelled_does():
    assert labelled_embeds(s_circ(3), s_circ(5)) is None
    assert find_embedding(s_graph(3).graph, s_graph(5).graph) is not None
    U3, U5 = LabelledGraph.unlabelled(s_graph(3).graph), LabelledGraph.unlabelled(s_graph(5).graph)
    assert labelled_embeds(U3, U5) is not None


def test_label_outside_poset():
    L = s_circ(3)
    with pytest.raises(GraphInputError):
        labelled_embeds(L, L, TRIVIAL_POSET)


def test_chain_poset_allows_upward_maps():
    P = LabelPoset.chain(["low", "high"])
    H = LabelledGraph(path_graph(2), ("low", "low"), P)
    G = LabelledGraph(path_graph(3), ("high", "high", "low"), P)
    assert labelled_embeds(H, G) is not None
    assert labelled_embeds(G, H) is None


@settings(max_examples=60, deadline=None)
@given(graphs(4), graphs(7))
def test_trivial_labels_match_plain_embedding(H, G):
    got = labelled_embeds(LabelledGraph.unlabelled(H), LabelledGraph.unlabelled(G))
    assert (got is None) == (find_embedding(H, G) is None)


def test_labelled_embedding_composes():
    a, b, c = s_circ(3), s_circ(3), s_circ(3)
    e1, e2 = labelled_embeds(a, b), labelled_embeds(b, c)
    e = e1.compose(e2)
    assert e.is_induced(a.graph, c.graph)
    assert all(a.labels[v] == c.labels[e[v]] for v in range(a.graph.n))


def test_antichains():
    assert verify_antichain([s_circ(k) for k in range(3, 9)]).valid
    assert verify_antichain([t_circ(k) for k in range(3, 7)]).valid
    assert not verify_antichain([s_circ(3), s_circ(4), s_circ(3)]).valid


def test_small_s_circ_are_not_an_antichain():
    # with k = 1 or 2 every vertex is white, so the colouring separates nothing
    assert not verify_antichain([s_circ(1), s_circ(2)]).valid


def test_consecutive_pairs_for_j_at_least_three():
    for k in range(3, 8):
        for j in range(3, k):
            embs = list(iter_embeddings(s_graph(j).graph, s_graph(k).graph))
            assert embs and all(s_pairs_consecutive(e, j, k) for e in embs)


def test_consecutive_pairs_fail_for_tiny_j():
    # S_2 = 2K2 also sits on the extra copies {x_i, y_(i+1), x_(i+1), y_(i+2)}
    bad = [e for e in iter_embeddings(s_graph(2).graph, s_graph(3).graph) if not s_pairs_consecutive(e, 2, 3)]
    assert len(bad) == 8
    e = Embedding((0, 1, 5, 4))  # x1->x1, x2->x2, y1->y3, y2->y2
    assert e.is_induced(s_graph(2).graph, s_graph(3).graph) and not s_pairs_consecutive(e, 2, 3)


def test_columns_and_intervals():
    g = z_grid(3, 3)
    ident = Embedding(tuple(range(9)))
    assert columns_occupied(ident, g) == {1, 2, 3}
    assert is_interval({1, 2, 3}) and is_interval({4}) and is_interval(set())
    assert not is_interval({1, 3})
    assert columns_occupied(Embedding((4,)), g) == {2}
    with pytest.raises(GraphInputError):
        columns_occupied(ident, g.graph)


def test_prime_bichain_graphs_occupy_intervals():
    # none on 2..6 vertices; a single tree on 7 vertices
    primes = canonically_prime_bichain_graphs(7)
    assert [G.n for G in primes] == [1, 7]
    rows = interval_report(primes, z_grid(6, 6))
    assert [r["embeddings"] for r in rows] == [36, 110]
    assert all(r["non_interval"] == 0 for r in rows)


def test_interval_report_flags_gaps():
    # an edgeless pair can sit in columns 1 and 3
    rows = interval_report([Graph.empty(2)], z_grid(3, 1))
    assert rows[0]["non_interval"] > 0


def test_bounded_columns():
    host, e = embed_in_bounded_columns(chain_universal(3)[0], 2)
    assert host.cols == 2 and e.is_induced(chain_universal(3)[0], host.graph)
    host, _ = embed_in_bounded_columns(Graph.empty(5), 1)
    assert host.rows == 5
    assert embed_in_bounded_columns(path_graph(3), 1) is None
    # observations, no reference value
    assert [minimal_column_width(s_graph(k).graph, 8) for k in (2, 3, 4)] == [4, 4, 4]


def test_aligned_square_identity():
    host = x_grid(4, 9)
    image = [host.index(c, r) for c in (2, 3) for r in range(1, 8)]
    assert aligned_square(host, image, 2) == (2, False)


def test_x_column_structure_small():
    r1 = x_embedding_column_structure(1, 2, 3, 1000)
    assert r1.passed and r1.checked > 0
    r2 = x_embedding_column_structure(2, 4, 9, 2000)
    assert r2.passed and r2.checked == 2000
    with pytest.raises(GraphInputError):
        x_embedding_column_structure(2, 1, 9, 10)


def test_colour_order_direction():
    # black may map onto white: still an antichain; white onto black: not
    def recolour(Ls, P):
        return [LabelledGraph(L.graph, L.labels, P) for L in Ls]

    black_low = LabelPoset.chain(["black", "white"])
    white_low = LabelPoset.chain(["white", "black"])
    S = [s_circ(k) for k in range(3, 9)]
    assert verify_antichain(recolour(S, black_low)).valid
    assert not verify_antichain(recolour(S, white_low)).valid
    assert labelled_embeds(*recolour([s_circ(3), s_circ(4)], white_low)) is not None
