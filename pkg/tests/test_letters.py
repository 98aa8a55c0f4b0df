import pytest
from hypothesis import given, settings, strategies as st

from bichain.errors import GraphInputError
from bichain.graph import are_isomorphic, complete_graph, induced_subgraph
from bichain.grids import z_grid, zsplit_grid
from bichain.letters import (LetterSystem, decode_letter_graph, position_coordinate, position_map,
                             z_letter_encoding, z_relation, zsplit_letter_encoding)


def test_trivial_systems():
    assert decode_letter_graph(LetterSystem(2, [], [1, 2, 1])).num_edges == 0
    assert decode_letter_graph(LetterSystem(1, [(1, 1)], [1] * 5)) == complete_graph(5)


def test_order_matters():
    L = LetterSystem(2, [(1, 2)], [1, 2, 2, 1])
    assert decode_letter_graph(L).edges() == [(0, 1), (0, 2)]


def test_validation():
    with pytest.raises(GraphInputError):
        LetterSystem(2, [(1, 3)], [1])
    with pytest.raises(GraphInputError):
        LetterSystem(2, [], [0])
    with pytest.raises(GraphInputError):
        LetterSystem.from_json({"k": 2})


def test_seven_column_relation():
    # R1, R2 and the diagonal pairs for seven letters
    assert z_relation(7) == {(1, 2), (3, 4), (5, 6), (3, 2), (5, 4), (7, 6),
                             (2, 5), (5, 2), (2, 7), (7, 2), (4, 7), (7, 4)}
    assert z_relation(2) == {(1, 2)}
    assert z_relation(1) == set()


def test_word_shape():
    L = z_letter_encoding(7, 3)
    assert L.word == (7, 6, 5, 4, 3, 2, 1) * 3
    assert position_coordinate(0, 7, 3) == (7, 3)
    assert position_coordinate(20, 7, 3) == (1, 1)


@pytest.mark.parametrize("cols", range(1, 9))
def test_z_encoding_equals_grid(cols):
    for rows in range(1, 9):
        D = decode_letter_graph(z_letter_encoding(cols, rows))
        G = z_grid(cols, rows).graph
        assert position_map(cols, rows).is_induced(D, G) and D.num_edges == G.num_edges


def test_single_column_is_edgeless():
    assert decode_letter_graph(z_letter_encoding(1, 5)).num_edges == 0


@pytest.mark.parametrize("cols", range(1, 7))
def test_zsplit_encoding(cols):
    for rows in range(1, 7):
        D = decode_letter_graph(zsplit_letter_encoding(cols, rows))
        assert are_isomorphic(D, zsplit_grid(cols, rows).graph)
    base = zsplit_letter_encoding(cols, 1).S - z_letter_encoding(cols, 1).S
    assert all(a % 2 == 0 and b % 2 == 0 for a, b in base)
    assert zsplit_letter_encoding(cols, 1).S - base == z_letter_encoding(cols, 1).S


def test_zsplit_two_by_two():
    L = zsplit_letter_encoding(2, 2)
    evens = [p for p, a in enumerate(L.word) if a == 2]
    assert decode_letter_graph(L).has_edge(*evens)


def test_json_round_trip():
    L = z_letter_encoding(4, 2)
    assert LetterSystem.from_json(L.to_json()) == L


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 4), st.data())
def test_deleting_a_position_gives_induced_subgraph(k, data):
    S = data.draw(st.sets(st.tuples(st.integers(1, k), st.integers(1, k))))
    word = data.draw(st.lists(st.integers(1, k), min_size=1, max_size=9))
    L = LetterSystem(k, S, word)
    p = data.draw(st.integers(0, len(word) - 1))
    keep = [q for q in range(len(word)) if q != p]
    assert decode_letter_graph(L.delete_position(p)) == induced_subgraph(decode_letter_graph(L), keep)
