"""Generators for the grid families and the graphs S_k, T_k and their colourings.

Coordinates are ``(column, row)`` with columns ``1..cols`` left to right and
rows ``1..rows`` bottom to top.  Vertex ``(i, j)`` of a grid with ``rows``
rows has index ``(i - 1) * rows + (j - 1)`` (column-major).

Edge rules, for columns ``i < i'``:

* X: ``(i, j) ~ (i+1, j')`` iff ``j >= j'``.
* Z: odd ``i``: ``(i, j) ~ (i+1, j')`` iff ``j > j'``; even ``i``: iff
  ``j <= j'``; plus every even column joined to every odd column ``>= i+3``.
* Y: odd ``i``: ``j >= j'``; even ``i``: ``j < j'``; the same long edges as
  Z; plus, for odd ``i >= 3``, ``(i, 1)`` joined to all of column ``i-1``.
* Z* ("zsplit"): Z plus a clique on all even-column vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .errors import GraphInputError, InternalConsistencyError
from .graph import Bipartition, Embedding, Graph, LabelledGraph, LabelPoset

FAMILIES = ("x", "y", "z", "zsplit")


@dataclass(frozen=True)
class GridGraph:
    graph: Graph
    family: str
    cols: int
    rows: int

    @property
    def coords(self) -> list[tuple[int, int]]:
        return [coord_of(v, self.rows) for v in range(self.graph.n)]

    def index(self, col: int, row: int) -> int:
        if not (1 <= col <= self.cols and 1 <= row <= self.rows):
            raise GraphInputError("(%d, %d) is outside a %dx%d grid" % (col, row, self.cols, self.rows))
        return grid_index(col, row, self.rows)

    def coord(self, v: int) -> tuple[int, int]:
        self.graph.check_vertex(v)
        return coord_of(v, self.rows)

    def column(self, col: int) -> list[int]:
        return [self.index(col, j) for j in range(1, self.rows + 1)]

    def column_mask(self, col: int) -> int:
        return ((1 << self.rows) - 1) << ((col - 1) * self.rows)


def grid_index(col: int, row: int, rows: int) -> int:
    return (col - 1) * rows + (row - 1)


def coord_of(v: int, rows: int) -> tuple[int, int]:
    return v // rows + 1, v % rows + 1


def _check_dims(cols: int, rows: int) -> None:
    if cols < 1 or rows < 1:
        raise GraphInputError("grid dimensions must be positive, got %dx%d" % (cols, rows))


def _grid(family: str, cols: int, rows: int, edges) -> GridGraph:
    G = Graph.from_edges(cols * rows, ((grid_index(*a, rows), grid_index(*b, rows)) for a, b in edges))
    return GridGraph(G, family, cols, rows)


def x_grid(cols: int, rows: int) -> GridGraph:
    _check_dims(cols, rows)
    edges = [((i, j), (i + 1, jj)) for i in range(1, cols) for j in range(1, rows + 1) for jj in range(1, j + 1)]
    return _grid("x", cols, rows, edges)


def _long_edges(cols: int, rows: int):
    for i in range(2, cols + 1, 2):
        for ii in range(i + 3, cols + 1, 2):
            for j in range(1, rows + 1):
                for jj in range(1, rows + 1):
                    yield (i, j), (ii, jj)


def z_grid(cols: int, rows: int) -> GridGraph:
    _check_dims(cols, rows)
    edges = []
    for i in range(1, cols):
        for j in range(1, rows + 1):
            if i % 2:
                edges += [((i, j), (i + 1, jj)) for jj in range(1, j)]
            else:
                edges += [((i, j), (i + 1, jj)) for jj in range(j, rows + 1)]
    edges += _long_edges(cols, rows)
    return _grid("z", cols, rows, edges)


def y_grid(cols: int, rows: int) -> GridGraph:
    _check_dims(cols, rows)
    edges = []
    for i in range(1, cols):
        for j in range(1, rows + 1):
            if i % 2:
                edges += [((i, j), (i + 1, jj)) for jj in range(1, j + 1)]
            else:
                edges += [((i, j), (i + 1, jj)) for jj in range(j + 1, rows + 1)]
    edges += _long_edges(cols, rows)
    for i in range(3, cols + 1, 2):
        edges += [((i, 1), (i - 1, j)) for j in range(1, rows + 1)]
    return _grid("y", cols, rows, edges)


def zsplit_grid(cols: int, rows: int) -> GridGraph:
    base = z_grid(cols, rows)
    evens = [grid_index(i, j, rows) for i in range(2, cols + 1, 2) for j in range(1, rows + 1)]
    edges = base.graph.edges() + [(u, v) for a, u in enumerate(evens) for v in evens[a + 1:]]
    return GridGraph(Graph.from_edges(cols * rows, edges), "zsplit", cols, rows)


GENERATORS: dict[str, Callable[[int, int], GridGraph]] = {
    "x": x_grid, "y": y_grid, "z": z_grid, "zsplit": zsplit_grid,
}


# -- rule predicates, used to re-derive adjacency from coordinates -------------

def _x_rule(a, b) -> bool:
    (i, j), (ii, jj) = sorted((a, b))
    return ii == i + 1 and j >= jj


def _z_rule(a, b) -> bool:
    (i, j), (ii, jj) = sorted((a, b))
    if ii == i + 1:
        return j > jj if i % 2 else j <= jj
    return i % 2 == 0 and ii % 2 == 1 and ii >= i + 3


def _y_rule(a, b) -> bool:
    (i, j), (ii, jj) = sorted((a, b))
    if ii == i + 1:
        if i % 2:
            return j >= jj
        return j < jj or (ii >= 3 and jj == 1)
    return i % 2 == 0 and ii % 2 == 1 and ii >= i + 3


def _zsplit_rule(a, b) -> bool:
    if a != b and a[0] % 2 == 0 and b[0] % 2 == 0:
        return True
    return _z_rule(a, b)


EDGE_RULES: dict[str, Callable] = {"x": _x_rule, "y": _y_rule, "z": _z_rule, "zsplit": _zsplit_rule}


def rederive(grid: GridGraph) -> Graph:
    """Rebuild the adjacency of ``grid`` from its coordinates and family rule."""
    rule = EDGE_RULES[grid.family]
    coords = grid.coords
    n = grid.graph.n
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rule(coords[u], coords[v])])


def odd_even_bipartition(grid: GridGraph) -> Bipartition:
    odd = [v for v, (i, _) in enumerate(grid.coords) if i % 2]
    return Bipartition(odd, [v for v in range(grid.graph.n) if v not in set(odd)])


# -- chain graphs ---------------------------------------------------------------

def chain_universal(n: int) -> tuple[Graph, Bipartition]:
    """Parts ``a_1..a_n`` (vertices ``0..n-1``) and ``b_1..b_n`` (``n..2n-1``); ``a_k b_j`` iff ``k >= j``."""
    if n < 1:
        raise GraphInputError("n must be positive")
    G = Graph.from_edges(2 * n, [(k, n + j) for k in range(n) for j in range(k + 1)])
    return G, Bipartition(range(n), range(n, 2 * n))


# -- the antichain graphs ---------------------------------------------------------

COLOURS = LabelPoset.antichain(["black", "white"])


@dataclass(frozen=True)
class AntichainGraph:
    """``S_k`` with ``x_i`` at vertex ``i-1`` and ``y_i`` at vertex ``k+i-1``."""

    graph: Graph
    k: int

    def x(self, i: int) -> int:
        return i - 1

    def y(self, i: int) -> int:
        return self.k + i - 1

    def role(self, v: int) -> tuple[str, int]:
        return ("x", v + 1) if v < self.k else ("y", v - self.k + 1)

    def bipartition(self) -> Bipartition:
        return Bipartition(range(self.k), range(self.k, 2 * self.k))


def s_graph(k: int) -> AntichainGraph:
    if k < 1:
        raise GraphInputError("k must be positive")
    edges = [(i, k + j) for i in range(k) for j in range(k) if j == i or j >= i + 2]
    return AntichainGraph(Graph.from_edges(2 * k, edges), k)


def _end_colouring(k: int) -> tuple[str, ...]:
    white = {0, k - 1, k, 2 * k - 1}
    return tuple("white" if v in white else "black" for v in range(2 * k))


def s_circ(k: int) -> LabelledGraph:
    return LabelledGraph(s_graph(k).graph, _end_colouring(k), COLOURS)


def t_graph(k: int) -> Graph:
    """``S_k`` with the x-side made into a clique."""
    S = s_graph(k).graph
    return Graph.from_edges(2 * k, S.edges() + [(a, b) for a in range(k) for b in range(a + 1, k)])


def t_circ(k: int) -> LabelledGraph:
    return LabelledGraph(t_graph(k), _end_colouring(k), COLOURS)


# -- Z/Y inter-embeddings ------------------------------------------------------------

Z_INTO_Y = "Z_into_Y"
Y_INTO_Z = "Y_into_Z"


def _z_into_y_map(n: int) -> list[int]:
    # column i is shifted up by i rows: (i, j) -> (i, j + i); never touches row 1
    return [grid_index(i, j + i, 2 * n) for i in range(1, n + 1) for j in range(1, n + 1)]


def _y_into_z_map(n: int) -> list[int]:
    # rows >= 2 of column i go to rows j + n - i; bottom of an odd column i >= 3
    # moves two columns right, bottom of an even column stays at row 1
    rows = 2 * n
    out = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if j > 1:
                out.append(grid_index(i, j + n - i, rows))
            elif i % 2 == 0 or n == 1:
                out.append(grid_index(i, 1, rows))
            else:
                out.append(grid_index(i + 2, 1, rows))
    return out


def zy_cross_embedding(n: int, direction: str) -> Embedding:
    """Explicit induced embedding ``Z_{n,n} -> Y_{2n,2n}`` or ``Y_{n,n} -> Z_{2n,2n}``.

    The Z-into-Y map avoids the bottom row of the host.  Every map is checked
    against the induced-embedding condition before it is returned.
    """
    if n < 1:
        raise GraphInputError("n must be positive")
    if direction == Z_INTO_Y:
        pattern, host, mapping = z_grid(n, n), y_grid(2 * n, 2 * n), _z_into_y_map(n)
    elif direction == Y_INTO_Z:
        pattern, host, mapping = y_grid(n, n), z_grid(2 * n, 2 * n), _y_into_z_map(n)
    else:
        raise GraphInputError("direction must be %r or %r" % (Z_INTO_Y, Y_INTO_Z))
    emb = Embedding(tuple(mapping))
    if not emb.is_induced(pattern.graph, host.graph):
        raise InternalConsistencyError("%s map for n=%d is not an induced embedding" % (direction, n))
    return emb
