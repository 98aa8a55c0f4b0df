"""Finite simple graphs as bitset rows, induced subgraphs and embedding search.

A :class:`Graph` on ``n`` vertices has vertex set ``0..n-1`` and stores one
integer bitmask per vertex (bit ``u`` of ``adj[v]`` is set iff ``uv`` is an
edge).  Values are immutable and hashable, so they can be shared freely
between threads and used as dictionary keys.

Embedding search
----------------
``iter_embeddings`` is a plain backtracking search for *induced* embeddings.
Pattern vertices are placed in a fixed order: first the vertex of largest
degree, then repeatedly the unplaced vertex with the most already-placed
neighbours (ties: larger degree, then smaller index).  For each pattern
vertex the host candidates are tried in increasing index.  The first
embedding returned by :func:`find_embedding` is therefore reproducible.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Hashable, Iterable, Iterator, Sequence

from .errors import CapacityError, GraphInputError

# Full enumeration without an explicit budget is refused above this host size.
ENUMERATION_HOST_LIMIT = 40


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits_to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise GraphInputError("adjacency has %d rows for %d vertices" % (len(self.adj), self.n))
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphInputError("vertex %d has a neighbour out of range" % v)
            if row >> v & 1:
                raise GraphInputError("self-loop at vertex %d" % v)
            for u in iter_bits(row):
                if not self.adj[u] >> v & 1:
                    raise GraphInputError("adjacency is not symmetric at (%d, %d)" % (v, u))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphInputError("edge (%d, %d) out of range for n=%d" % (u, v, n))
            if u == v:
                raise GraphInputError("self-loop at vertex %d" % u)
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def vertices(self) -> range:
        return range(self.n)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbours(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return bin(self.adj[v]).count("1")

    def degrees(self) -> list[int]:
        return [bin(row).count("1") for row in self.adj]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def num_edges(self) -> int:
        return sum(self.degrees()) // 2

    def complement(self) -> "Graph":
        full = self.full_mask
        return Graph(self.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(self.adj)))

    def check_vertex(self, v: int) -> None:
        if not isinstance(v, int) or not 0 <= v < self.n:
            raise GraphInputError("vertex %r is not in 0..%d" % (v, self.n - 1))

    def is_clique(self, vertices: Iterable[int]) -> bool:
        mask = bits_to_mask(vertices)
        return all((self.adj[v] | 1 << v) & mask == mask for v in iter_bits(mask))

    def is_independent(self, vertices: Iterable[int]) -> bool:
        mask = bits_to_mask(vertices)
        return all(self.adj[v] & mask == 0 for v in iter_bits(mask))

    def components(self) -> list[list[int]]:
        seen = 0
        comps = []
        for s in range(self.n):
            if seen >> s & 1:
                continue
            comp = frontier = 1 << s
            while frontier:
                nxt = 0
                for v in iter_bits(frontier):
                    nxt |= self.adj[v]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            comps.append(list(iter_bits(comp)))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def two_colouring(self) -> list[int] | None:
        """Colour 0/1 per vertex with the smallest vertex of each component coloured 0."""
        colour = [-1] * self.n
        for s in range(self.n):
            if colour[s] >= 0:
                continue
            colour[s] = 0
            stack = [s]
            while stack:
                v = stack.pop()
                for u in iter_bits(self.adj[v]):
                    if colour[u] < 0:
                        colour[u] = 1 - colour[v]
                        stack.append(u)
                    elif colour[u] == colour[v]:
                        return None
        return colour

    def is_bipartite(self) -> bool:
        return self.two_colouring() is not None

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph in which old vertex ``v`` becomes ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphInputError("not a permutation of 0..%d" % (self.n - 1))
        rows = [0] * self.n
        for v in range(self.n):
            rows[perm[v]] = bits_to_mask(perm[u] for u in iter_bits(self.adj[v]))
        return Graph(self.n, tuple(rows))

    def __repr__(self):
        return "Graph(n=%d, edges=%r)" % (self.n, self.edges())


@dataclass(frozen=True)
class Bipartition:
    part_x: frozenset[int]
    part_y: frozenset[int]

    def __init__(self, part_x: Iterable[int], part_y: Iterable[int]):
        object.__setattr__(self, "part_x", frozenset(part_x))
        object.__setattr__(self, "part_y", frozenset(part_y))

    def validate(self, G: Graph) -> None:
        if self.part_x & self.part_y:
            raise GraphInputError("parts overlap")
        if self.part_x | self.part_y != frozenset(range(G.n)):
            raise GraphInputError("parts do not cover the vertex set")
        if not G.is_independent(self.part_x) or not G.is_independent(self.part_y):
            raise GraphInputError("bipartition has an edge inside a part")

    def swapped(self) -> "Bipartition":
        return Bipartition(self.part_y, self.part_x)

    def side_of(self, v: int) -> int:
        return 0 if v in self.part_x else 1


def colour_bipartition(G: Graph) -> Bipartition:
    colour = G.two_colouring()
    if colour is None:
        raise GraphInputError("graph is not bipartite")
    return Bipartition([v for v in G.vertices() if colour[v] == 0],
                       [v for v in G.vertices() if colour[v] == 1])


def all_bipartitions(G: Graph) -> Iterator[Bipartition]:
    """Every bipartition obtained by swapping colours of nontrivial components.

    Isolated vertices are always placed in ``part_x``; the first nontrivial
    component keeps its canonical colouring, so each bipartition appears once
    up to swapping the two parts.
    """
    colour = G.two_colouring()
    if colour is None:
        raise GraphInputError("graph is not bipartite")
    comps = [c for c in G.components() if len(c) > 1]
    isolated = [c[0] for c in G.components() if len(c) == 1]
    flips = max(len(comps) - 1, 0)
    for code in range(1 << flips):
        xs = list(isolated)
        ys = []
        for idx, comp in enumerate(comps):
            flip = idx > 0 and code >> (idx - 1) & 1
            for v in comp:
                (xs if colour[v] ^ flip == 0 else ys).append(v)
        yield Bipartition(xs, ys)


@dataclass(frozen=True)
class Embedding:
    """Injective map ``pattern vertex i -> mapping[i]``."""

    mapping: tuple[int, ...]

    @property
    def pattern_order(self) -> int:
        return len(self.mapping)

    def __getitem__(self, v: int) -> int:
        return self.mapping[v]

    def image(self) -> list[int]:
        return list(self.mapping)

    def is_induced(self, H: Graph, G: Graph) -> bool:
        if len(self.mapping) != H.n or len(set(self.mapping)) != H.n:
            return False
        if any(not 0 <= w < G.n for w in self.mapping):
            return False
        return all(H.has_edge(u, v) == G.has_edge(self.mapping[u], self.mapping[v])
                   for u in range(H.n) for v in range(u + 1, H.n))

    def compose(self, other: "Embedding") -> "Embedding":
        """``other`` after ``self``: pattern -> self's host -> other's host."""
        return Embedding(tuple(other.mapping[w] for w in self.mapping))


@dataclass(frozen=True)
class LabelPoset:
    elements: tuple[Hashable, ...]
    relation: frozenset[tuple[Hashable, Hashable]] = field(default_factory=frozenset)

    def __post_init__(self):
        elems = set(self.elements)
        for a, b in self.relation:
            if a not in elems or b not in elems:
                raise GraphInputError("relation mentions unknown label %r" % ((a, b),))
        for a in self.elements:
            if (a, a) not in self.relation:
                raise GraphInputError("relation is not reflexive at %r" % (a,))
        for a, b in self.relation:
            for c, d in self.relation:
                if b == c and (a, d) not in self.relation:
                    raise GraphInputError("relation is not transitive: %r <= %r <= %r" % (a, b, d))

    @classmethod
    def antichain(cls, elements: Iterable[Hashable]) -> "LabelPoset":
        elements = tuple(elements)
        return cls(elements, frozenset((a, a) for a in elements))

    @classmethod
    def chain(cls, elements: Iterable[Hashable]) -> "LabelPoset":
        elements = tuple(elements)
        return cls(elements, frozenset((a, b) for i, a in enumerate(elements) for b in elements[i:]))

    def leq(self, a: Hashable, b: Hashable) -> bool:
        return (a, b) in self.relation


TRIVIAL_POSET = LabelPoset.antichain(["*"])


@dataclass(frozen=True)
class LabelledGraph:
    graph: Graph
    labels: tuple[Hashable, ...]
    poset: LabelPoset

    def __post_init__(self):
        if len(self.labels) != self.graph.n:
            raise GraphInputError("need exactly one label per vertex")
        elems = set(self.poset.elements)
        for v, lab in enumerate(self.labels):
            if lab not in elems:
                raise GraphInputError("label %r of vertex %d is not in the label set" % (lab, v))

    @classmethod
    def unlabelled(cls, G: Graph) -> "LabelledGraph":
        return cls(G, ("*",) * G.n, TRIVIAL_POSET)


# -- basic operations --------------------------------------------------------

def induced_subgraph(G: Graph, U: Iterable[int]) -> Graph:
    """Subgraph induced by ``U``; vertex ``U[t]`` becomes ``t``.

    A sequence keeps its order; sets and other unordered collections are sorted
    first.
    """
    order = sorted(U) if isinstance(U, (set, frozenset)) else list(U)
    if len(set(order)) != len(order):
        raise GraphInputError("repeated vertex in induced_subgraph")
    for v in order:
        G.check_vertex(v)
    pos = {v: t for t, v in enumerate(order)}
    rows = []
    for v in order:
        rows.append(bits_to_mask(pos[u] for u in iter_bits(G.adj[v]) if u in pos))
    return Graph(len(order), tuple(rows))


def bipartite_complement(G: Graph, B: Bipartition) -> Graph:
    B.validate(G)
    xs = bits_to_mask(B.part_x)
    ys = bits_to_mask(B.part_y)
    rows = []
    for v in range(G.n):
        other = ys if xs >> v & 1 else xs
        rows.append(other & ~G.adj[v])
    return Graph(G.n, tuple(rows))


def disjoint_union(*graphs: Graph) -> Graph:
    rows: list[int] = []
    offset = 0
    for H in graphs:
        rows.extend(row << offset for row in H.adj)
        offset += H.n
    return Graph(offset, tuple(rows))


# -- small named graphs ------------------------------------------------------

def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphInputError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def matching_graph(m: int) -> Graph:
    """``m`` disjoint edges (mK2); edge ``t`` joins ``2t`` and ``2t+1``."""
    return Graph.from_edges(2 * m, [(2 * t, 2 * t + 1) for t in range(m)])


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def all_graphs(n: int) -> list[Graph]:
    """One representative of every isomorphism class on exactly ``n`` vertices (n <= 7)."""
    if not 0 <= n <= 7:
        raise CapacityError("graph atlas only covers 0..7 vertices")
    import networkx as nx

    out = []
    for H in nx.graph_atlas_g():
        if H.number_of_nodes() == n:
            out.append(Graph.from_edges(n, H.edges()))
    return out


# -- embedding search ---------------------------------------------------------

def _search_order(H: Graph) -> list[int]:
    if H.n == 0:
        return []
    deg = H.degrees()
    order = [max(range(H.n), key=lambda v: (deg[v], -v))]
    placed = 1 << order[0]
    while len(order) < H.n:
        best = max((v for v in range(H.n) if not placed >> v & 1),
                   key=lambda v: (bin(H.adj[v] & placed).count("1"), deg[v], -v))
        order.append(best)
        placed |= 1 << best
    return order


def iter_embeddings(H: Graph, G: Graph, candidates: Sequence[int] | None = None,
                    exact_degree: bool = False) -> Iterator[Embedding]:
    """Yield every induced embedding of ``H`` into ``G`` in the documented order.

    ``candidates[p]`` optionally restricts the host vertices allowed for
    pattern vertex ``p`` (bitmask).  ``exact_degree`` requires equal degrees,
    which is what an isomorphism test wants.
    """
    m, n = H.n, G.n
    if m > n:
        return
    if m == 0:
        yield Embedding(())
        return
    order = _search_order(H)
    hdeg = H.degrees()
    gdeg = G.degrees()
    allowed = []
    for p in order:
        mask = G.full_mask if candidates is None else candidates[p] & G.full_mask
        keep = 0
        for c in iter_bits(mask):
            if exact_degree:
                ok = gdeg[c] == hdeg[p]
            else:
                ok = gdeg[c] >= hdeg[p] and n - 1 - gdeg[c] >= m - 1 - hdeg[p]
            if ok:
                keep |= 1 << c
        if not keep:
            return
        allowed.append(keep)
    constraints = [[(s, H.has_edge(p, order[s])) for s in range(t)] for t, p in enumerate(order)]
    adj = G.adj
    image = [0] * m

    def extend(t: int, used: int) -> Iterator[Embedding]:
        cand = allowed[t] & ~used
        for s, adjacent in constraints[t]:
            row = adj[image[s]]
            cand &= row if adjacent else ~row
            if not cand:
                return
        last = t == m - 1
        while cand:
            low = cand & -cand
            cand ^= low
            image[t] = low.bit_length() - 1
            if last:
                mapping = [0] * m
                for s in range(m):
                    mapping[order[s]] = image[s]
                yield Embedding(tuple(mapping))
            else:
                yield from extend(t + 1, used | low)

    yield from extend(0, 0)


def find_embedding(H: Graph, G: Graph, candidates: Sequence[int] | None = None) -> Embedding | None:
    return next(iter_embeddings(H, G, candidates), None)


def enumerate_embeddings(H: Graph, G: Graph, budget: int | None = None,
                         candidates: Sequence[int] | None = None) -> list[Embedding]:
    """All induced embeddings, in search order, truncated at ``budget``.

    ``budget=None`` means unlimited and is only accepted for hosts of at most
    ``ENUMERATION_HOST_LIMIT`` vertices.
    """
    if budget is None:
        if G.n > ENUMERATION_HOST_LIMIT:
            raise CapacityError("host has %d vertices; pass an explicit budget" % G.n)
    elif budget < 0:
        raise GraphInputError("budget must be non-negative")
    out = []
    if budget == 0:
        return out
    for e in iter_embeddings(H, G, candidates):
        out.append(e)
        if budget is not None and len(out) >= budget:
            break
    return out


def are_isomorphic(G: Graph, H: Graph) -> bool:
    if G.n != H.n or G.num_edges != H.num_edges:
        return False
    if sorted(G.degrees()) != sorted(H.degrees()):
        return False
    return next(iter_embeddings(G, H, exact_degree=True), None) is not None


def find_isomorphism(G: Graph, H: Graph) -> Embedding | None:
    if G.n != H.n or sorted(G.degrees()) != sorted(H.degrees()):
        return None
    return next(iter_embeddings(G, H, exact_degree=True), None)


def contains(G: Graph, H: Graph) -> bool:
    """True iff ``H`` is an induced subgraph of ``G``."""
    return find_embedding(H, G) is not None
