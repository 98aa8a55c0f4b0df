"""Canonical decomposition of bipartite graphs by disjoint union, join and skew join.

Operands are :class:`Piece` objects: a vertex set with its edges and its
``X`` side, vertices keeping their ids from the host graph.  The three
operations on pieces ``P1``, ``P2`` (``X1, Y1`` from ``P1``):

* ``+`` disjoint union: no new edges;
* ``x`` join: add ``X1*Y2`` and ``X2*Y1``;
* ``/`` skew join: add ``X1*Y2`` only (order matters).

At each node the splits are tried in the order ``+``, ``x``, ``/``.  ``+``
and ``x`` nodes take all components (of the graph, resp. of its bipartite
complement) as children.  A ``/`` node has two children; the left one is the
smallest closed set generated by the least vertex that generates a proper
one (see :func:`_skew_left`).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Any

from .errors import GraphInputError
from .graph import Bipartition, Graph, bits_to_mask, iter_bits

OPS = ("+", "x", "/")


@dataclass(frozen=True)
class Piece:
    vertices: frozenset
    edges: frozenset
    part_x: frozenset

    @property
    def part_y(self) -> frozenset:
        return self.vertices - self.part_x

    @classmethod
    def of(cls, G: Graph, B: Bipartition, vertices=None) -> "Piece":
        vs = frozenset(range(G.n) if vertices is None else vertices)
        edges = frozenset((u, v) for u, v in G.edges() if u in vs and v in vs)
        return cls(vs, edges, frozenset(B.part_x) & vs)

    @classmethod
    def single(cls, v: int, side: int) -> "Piece":
        return cls(frozenset([v]), frozenset(), frozenset([v]) if side == 0 else frozenset())

    def to_graph(self, n: int) -> tuple[Graph, Bipartition]:
        """As a graph on ``0..n-1``; vertices outside the piece are isolated and put in ``Y``."""
        return Graph.from_edges(n, self.edges), Bipartition(self.part_x, set(range(n)) - self.part_x)


def _norm(u, v):
    return (u, v) if u < v else (v, u)


def compose(op: str, p1: Piece, p2: Piece) -> Piece:
    if p1.vertices & p2.vertices:
        raise GraphInputError("operands share vertices %s" % sorted(p1.vertices & p2.vertices))
    if op not in OPS:
        raise GraphInputError("unknown operation %r" % (op,))
    edges = set(p1.edges | p2.edges)
    if op in ("x", "/"):
        edges |= {_norm(a, b) for a, b in product(p1.part_x, p2.part_y)}
    if op == "x":
        edges |= {_norm(a, b) for a, b in product(p2.part_x, p1.part_y)}
    return Piece(p1.vertices | p2.vertices, frozenset(edges), p1.part_x | p2.part_x)


@dataclass
class DecompositionTree:
    """``op`` is one of ``+ x /`` for internal nodes, ``None`` for a single
    vertex and ``"prime"`` for an indecomposable piece on two or more vertices."""

    op: str | None
    vertices: frozenset
    children: list["DecompositionTree"] = field(default_factory=list)

    @property
    def is_leaf(self) -> bool:
        return not self.children

    def recompose(self, G: Graph, B: Bipartition) -> Piece:
        """Rebuild the piece bottom-up; prime leaves take their edges from ``G``."""
        if self.op is None:
            (v,) = self.vertices
            return Piece.single(v, 0 if v in B.part_x else 1)
        if self.op == "prime":
            return Piece.of(G, B, self.vertices)
        out = self.children[0].recompose(G, B)
        for child in self.children[1:]:
            out = compose(self.op, out, child.recompose(G, B))
        return out

    def to_json(self) -> Any:
        if self.op is None:
            return next(iter(self.vertices))
        if self.op == "prime":
            return {"op": "prime", "vertices": sorted(self.vertices)}
        return {"op": self.op, "children": [c.to_json() for c in self.children]}

    @classmethod
    def from_json(cls, obj: Any) -> "DecompositionTree":
        if isinstance(obj, int):
            return cls(None, frozenset([obj]))
        if obj.get("op") == "prime":
            return cls("prime", frozenset(obj["vertices"]))
        children = [cls.from_json(c) for c in obj["children"]]
        return cls(obj["op"], frozenset().union(*(c.vertices for c in children)), children)


# -- split detection -------------------------------------------------------------------

def _components(adj: list[int], mask: int) -> list[int]:
    out = []
    rest = mask
    while rest:
        low = rest & -rest
        comp, frontier = low, low
        while frontier:
            v = (frontier & -frontier).bit_length() - 1
            frontier &= frontier - 1
            new = adj[v] & mask & ~comp
            comp |= new
            frontier |= new
        out.append(comp)
        rest &= ~comp
    return out


def _cobip_adj(G: Graph, xmask: int, ymask: int) -> list[int]:
    adj = [0] * G.n
    for v in range(G.n):
        other = ymask if xmask >> v & 1 else xmask
        adj[v] = other & ~G.adj[v]
    return adj


def _closure(succ: list[int], start: int, mask: int) -> int:
    seen, frontier = start, start
    while frontier:
        v = (frontier & -frontier).bit_length() - 1
        frontier &= frontier - 1
        new = succ[v] & mask & ~seen
        seen |= new
        frontier |= new
    return seen


def _skew_left(G: Graph, xmask: int, mask: int) -> int | None:
    """Left operand of a skew join on ``mask``, or ``None``.

    ``L`` is a valid left set iff it is closed under: ``x in L`` and ``xy``
    a non-edge forces ``y in L``; ``y in L`` and ``xy`` an edge forces
    ``x in L``.  We return the closure of the least vertex whose closure is
    a proper subset.
    """
    succ = [0] * G.n
    ymask = mask & ~xmask
    for x in iter_bits(xmask & mask):
        for y in iter_bits(ymask):
            if G.adj[x] >> y & 1:
                succ[y] |= 1 << x
            else:
                succ[x] |= 1 << y
    for v in iter_bits(mask):
        left = _closure(succ, 1 << v, mask)
        if left != mask:
            return left
    return None


def split_of(G: Graph, xmask: int, mask: int) -> tuple[str, list[int]] | None:
    """First applicable split of the piece on ``mask``: ``(op, [child masks])``."""
    if bin(mask).count("1") <= 1:
        return None
    comps = _components(G.adj, mask)
    if len(comps) > 1:
        return "+", comps
    comps = _components(_cobip_adj(G, xmask, mask & ~xmask), mask)
    if len(comps) > 1:
        return "x", comps
    left = _skew_left(G, xmask, mask)
    if left is not None:
        return "/", [left, mask & ~left]
    return None


def canonical_decompose(G: Graph, B: Bipartition) -> DecompositionTree:
    B.validate(G)
    xmask = bits_to_mask(B.part_x)

    def build(mask: int) -> DecompositionTree:
        vs = frozenset(iter_bits(mask))
        found = split_of(G, xmask, mask)
        if found is None:
            return DecompositionTree(None if len(vs) == 1 else "prime", vs)
        op, parts = found
        return DecompositionTree(op, vs, [build(m) for m in parts])

    if G.n == 0:
        return DecompositionTree("prime", frozenset())
    return build(G.full_mask)


def is_canonically_prime(G: Graph, B: Bipartition) -> bool:
    """Graphs on at most one vertex count as prime."""
    B.validate(G)
    return split_of(G, bits_to_mask(B.part_x), G.full_mask) is None


def is_canonically_prime_bruteforce(G: Graph, B: Bipartition) -> bool:
    """Try every ordered 2-partition of the vertices against all three operations."""
    B.validate(G)
    n = G.n
    if n <= 1:
        return True
    xmask = bits_to_mask(B.part_x)
    ymask = G.full_mask & ~xmask
    full = G.full_mask
    for left in range(1, full):
        right = full & ~left
        # edges leaving the left side, restricted by side
        xl_to_r = 0  # union over x in left of N(x) & right
        all_xl_yr = True
        any_xr_yl = False
        for v in iter_bits(left):
            cross = G.adj[v] & right
            if xmask >> v & 1:
                if cross != right & ymask:
                    all_xl_yr = False
                xl_to_r |= cross
            elif cross:
                any_xr_yl = True
        no_cross = xl_to_r == 0 and not any_xr_yl
        if no_cross:
            return False
        if all_xl_yr and not any_xr_yl:
            return False  # skew join, left operand first
        # join: every cross pair between opposite sides is an edge
        if all_xl_yr and all(G.adj[v] & right & xmask == right & xmask for v in iter_bits(left & ymask)):
            return False
    return True


def split_side_decompose(G: Graph, clique, independent) -> DecompositionTree:
    """Decompose a split graph by passing to ``G*`` (clique edges removed)."""
    from .transforms import SplitPartition, split_bipartite_transform
    P = SplitPartition(clique, independent)
    return canonical_decompose(split_bipartite_transform(G, P), P.as_bipartition())
