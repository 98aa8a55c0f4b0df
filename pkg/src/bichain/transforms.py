"""Local complementation, pivoting and the split <-> bipartite transform."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import GraphInputError, PreconditionError
from .graph import Bipartition, Graph, bits_to_mask, iter_bits
from .grids import x_grid


def local_complement(G: Graph, v: int) -> Graph:
    """``G * v``: complement the subgraph induced on ``N(v)``."""
    G.check_vertex(v)
    nbhd = G.adj[v]
    rows = list(G.adj)
    for u in iter_bits(nbhd):
        rows[u] ^= nbhd & ~(1 << u)
    return Graph(G.n, tuple(rows))


def _check_edge(G: Graph, u: int, v: int) -> None:
    G.check_vertex(u)
    G.check_vertex(v)
    if not G.has_edge(u, v):
        raise PreconditionError("pivot needs an edge, but %d-%d is not one" % (u, v))


def pivot_toggle(G: Graph, u: int, v: int) -> Graph:
    """Complement the edges between ``N(u)&N(v)``, ``N(u)-N(v)`` and ``N(v)-N(u)``.

    ``u`` and ``v`` themselves are left in place, so this is the pivot
    *without* the exchange of the two end vertices.
    """
    _check_edge(G, u, v)
    ends = 1 << u | 1 << v
    nu = G.adj[u] & ~ends
    nv = G.adj[v] & ~ends
    both, only_u, only_v = nu & nv, nu & ~nv, nv & ~nu
    rows = list(G.adj)
    for a, b in ((both, only_u), (both, only_v), (only_u, only_v)):
        for w in iter_bits(a):
            rows[w] ^= b
        for w in iter_bits(b):
            rows[w] ^= a
    return Graph(G.n, tuple(rows))


def _swap(G: Graph, u: int, v: int) -> Graph:
    perm = list(range(G.n))
    perm[u], perm[v] = v, u
    return G.relabel(perm)


def pivot_by_three_sets(G: Graph, u: int, v: int) -> Graph:
    return _swap(pivot_toggle(G, u, v), u, v)


def pivot_by_local_complements(G: Graph, u: int, v: int) -> Graph:
    _check_edge(G, u, v)
    return local_complement(local_complement(local_complement(G, u), v), u)


def pivot(G: Graph, u: int, v: int) -> Graph:
    """``G * u * v * u`` for an edge ``uv``."""
    return pivot_by_three_sets(G, u, v)


@dataclass
class PivotTrace:
    edges: list[tuple[int, int]] = field(default_factory=list)
    graphs: list[Graph] = field(default_factory=list)


def pivot_sequence(G: Graph, edges, keep_graphs: bool = False) -> tuple[Graph, PivotTrace]:
    """Apply :func:`pivot_toggle` along ``edges`` in order."""
    trace = PivotTrace()
    for u, v in edges:
        G = pivot_toggle(G, u, v)
        trace.edges.append((u, v))
        if keep_graphs:
            trace.graphs.append(G)
    return G, trace


def bottom_row_schedule(n: int) -> list[tuple[int, int]]:
    """Bottom-row edges ``(2t-1, 1)-(2t, 1)`` of a ``2n x 2n`` grid, right to left."""
    rows = 2 * n
    return [((2 * t - 2) * rows, (2 * t - 1) * rows) for t in range(n, 0, -1)]


def pivot_x_to_y(n: int, keep_graphs: bool = False) -> tuple[Graph, PivotTrace]:
    """Pivot ``X_{2n,2n}`` on alternate bottom-row edges from right to left.

    The end-vertex exchange of a true pivot is dropped (it is a relabelling
    of two vertices), so the output can be compared vertex-for-vertex with
    ``y_grid(2n, 2n)``.
    """
    if n < 1:
        raise GraphInputError("n must be positive")
    return pivot_sequence(x_grid(2 * n, 2 * n).graph, bottom_row_schedule(n), keep_graphs)


def pivot_y_to_x(G: Graph, n: int) -> Graph:
    """Inverse schedule (left to right) on a ``2n x 2n`` Y-grid."""
    return pivot_sequence(G, list(reversed(bottom_row_schedule(n))))[0]


# -- split <-> bipartite ----------------------------------------------------------

@dataclass(frozen=True)
class SplitPartition:
    clique: frozenset[int]
    independent: frozenset[int]

    def __init__(self, clique, independent):
        object.__setattr__(self, "clique", frozenset(clique))
        object.__setattr__(self, "independent", frozenset(independent))

    def validate(self, G: Graph) -> None:
        if self.clique & self.independent or self.clique | self.independent != frozenset(range(G.n)):
            raise GraphInputError("split partition must split the vertex set")
        if not G.is_clique(self.clique):
            raise GraphInputError("clique side is not a clique")
        if not G.is_independent(self.independent):
            raise GraphInputError("independent side has an edge")

    def as_bipartition(self) -> Bipartition:
        return Bipartition(self.clique, self.independent)


def split_bipartite_transform(G: Graph, P: SplitPartition) -> Graph:
    """``G*``: delete the edges inside the clique."""
    P.validate(G)
    cmask = bits_to_mask(P.clique)
    return Graph(G.n, tuple(row & ~cmask if cmask >> v & 1 else row for v, row in enumerate(G.adj)))


def bipartite_split_transform(G: Graph, B: Bipartition, side: int = 0) -> Graph:
    """Complete part ``side`` (0 = ``part_x``, 1 = ``part_y``) into a clique."""
    B.validate(G)
    part = B.part_x if side == 0 else B.part_y
    mask = bits_to_mask(part)
    return Graph(G.n, tuple(row | mask & ~(1 << v) if mask >> v & 1 else row for v, row in enumerate(G.adj)))


def split_partitions(G: Graph) -> list[SplitPartition]:
    """Every partition of ``V(G)`` into a clique and an independent set (brute force)."""
    out = []
    for cmask in range(1 << G.n):
        clique = list(iter_bits(cmask))
        rest = [v for v in range(G.n) if not cmask >> v & 1]
        if G.is_clique(clique) and G.is_independent(rest):
            out.append(SplitPartition(clique, rest))
    return out
