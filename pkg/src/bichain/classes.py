"""Recognizers for chain, bichain, split and split permutation graphs.

Every recognizer runs two independent methods (a forbidden induced subgraph
search and a structural test) and raises ``InternalConsistencyError`` if they
disagree.  Rejections carry an induced embedding of a forbidden graph;
acceptances carry a certificate that can be re-checked on its own.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any

from .errors import InternalConsistencyError
from .graph import (Bipartition, Embedding, Graph, all_bipartitions, cycle_graph, find_embedding, iter_bits,
                    matching_graph, path_graph)
from .transforms import SplitPartition, bipartite_split_transform


@dataclass
class RecognitionReport:
    verdict: bool
    witness: Any = None
    forbidden: str | None = None
    details: dict = field(default_factory=dict)

    def __bool__(self):
        return self.verdict


# -- named forbidden graphs ---------------------------------------------------------

def _split_from_bipartite(H: Graph, side_vertices) -> Graph:
    side = frozenset(side_vertices)
    B = Bipartition(side, [v for v in range(H.n) if v not in side])
    return bipartite_split_transform(H, B, 0)


@lru_cache(maxsize=None)
def forbidden_graphs() -> dict[str, Graph]:
    """The graphs named in the forbidden lists.

    The four split graphs are built by completing one side of 3K2, C6 or P7
    into a clique.  Rising-sun completes the three inner vertices of P7,
    Co-rising-sun the four outer ones.
    """
    p7 = path_graph(7)
    return {
        "2K2": matching_graph(2),
        "3K2": matching_graph(3),
        "C4": cycle_graph(4),
        "C5": cycle_graph(5),
        "C6": cycle_graph(6),
        "P7": path_graph(7),
        "Sun3": _split_from_bipartite(matching_graph(3), [0, 2, 4]),
        "Co-sun3": _split_from_bipartite(cycle_graph(6), [0, 2, 4]),
        "Rising-sun": _split_from_bipartite(p7, [1, 3, 5]),
        "Co-rising-sun": _split_from_bipartite(p7, [0, 2, 4, 6]),
    }


BICHAIN_FORBIDDEN = ("P7", "C6", "3K2")
SPLIT_FORBIDDEN = ("2K2", "C4", "C5")
SPLIT_PERMUTATION_FORBIDDEN = ("2K2", "C4", "C5", "Sun3", "Co-sun3", "Rising-sun", "Co-rising-sun")


def find_forbidden(G: Graph, names) -> tuple[str, Embedding] | None:
    graphs = forbidden_graphs()
    for name in names:
        emb = find_embedding(graphs[name], G)
        if emb is not None:
            return name, emb
    return None


def shortest_odd_cycle(G: Graph) -> list[int] | None:
    """Vertices of a shortest odd cycle, in cyclic order (always chordless)."""
    best = None
    for s in range(G.n):
        dist = {s: 0}
        parent = {s: None}
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in iter_bits(G.adj[v]):
                if u not in dist:
                    dist[u] = dist[v] + 1
                    parent[u] = v
                    queue.append(u)
                elif dist[u] == dist[v] and (best is None or 2 * dist[v] + 1 < len(best)):
                    a, b = [v], [u]
                    while parent[a[-1]] is not None:
                        a.append(parent[a[-1]])
                    while parent[b[-1]] is not None:
                        b.append(parent[b[-1]])
                    while len(a) > 1 and len(b) > 1 and a[-2] == b[-2]:
                        a.pop()
                        b.pop()
                    cyc = a[::-1] + b[:-1]
                    if len(cyc) % 2 == 1 and len(cyc) == len(set(cyc)):
                        best = cyc
    return best


# -- neighbourhood orders --------------------------------------------------------------

def vicinal_leq(G: Graph, x: int, y: int) -> bool:
    """``x <= y`` iff ``N(x)`` is contained in ``N(y) + {y}``."""
    return G.adj[x] & ~(G.adj[y] | 1 << y) == 0


def _max_matching(n: int, succ: list[list[int]]) -> int:
    match_right = [-1] * n

    def augment(v: int, seen: list[bool]) -> bool:
        for u in succ[v]:
            if not seen[u]:
                seen[u] = True
                if match_right[u] < 0 or augment(match_right[u], seen):
                    match_right[u] = v
                    return True
        return False

    return sum(augment(v, [False] * n) for v in range(n))


def dilworth_number(G: Graph) -> int:
    """Largest antichain of the vicinal preorder, via a chain-cover matching.

    Mutually comparable vertices are merged first; on the resulting poset the
    largest antichain equals the number of elements minus a maximum matching
    of the strict order (Dilworth / Konig).
    """
    if G.n == 0:
        return 0
    reps: list[int] = []
    for v in range(G.n):
        if not any(vicinal_leq(G, v, r) and vicinal_leq(G, r, v) for r in reps):
            reps.append(v)
    m = len(reps)
    succ = [[b for b in range(m) if a != b and vicinal_leq(G, reps[a], reps[b])] for a in range(m)]
    return m - _max_matching(m, succ)


def dilworth_number_bruteforce(G: Graph) -> int:
    """Largest set of pairwise incomparable vertices, by exhaustive search."""
    n = G.n
    incomparable = [0] * n
    for x in range(n):
        for y in range(n):
            if x != y and not vicinal_leq(G, x, y) and not vicinal_leq(G, y, x):
                incomparable[x] |= 1 << y
    best = 0

    def grow(chosen: int, cand: int, size: int):
        nonlocal best
        if size + bin(cand).count("1") <= best:
            return
        if not cand:
            best = max(best, size)
            return
        v = cand.bit_length() - 1
        grow(chosen | 1 << v, cand & incomparable[v] & ~(1 << v), size + 1)
        grow(chosen, cand & ~(1 << v), size)

    grow(0, G.full_mask, 0)
    return best if n else 0


# -- chain structure -------------------------------------------------------------------

def _nbhd_comparable(G: Graph, u: int, v: int) -> bool:
    a, b = G.adj[u], G.adj[v]
    return a & b == a or a & b == b


def is_chain_part(G: Graph, part) -> list[int] | None:
    """Order of ``part`` by increasing neighbourhood, or ``None`` if not a chain."""
    order = sorted(part, key=lambda v: (G.degree(v), v))
    for u, v in zip(order, order[1:]):
        if G.adj[u] & ~G.adj[v]:
            return None
    return order


def chain_cover(G: Graph, part, k: int) -> list[list[int]] | None:
    """Split ``part`` into at most ``k`` (1 or 2) neighbourhood chains."""
    part = sorted(part)
    if k == 1:
        order = is_chain_part(G, part)
        return None if order is None else [order] if part else []
    # two chains iff the incomparability graph on the part is 2-colourable
    colour: dict[int, int] = {}
    for s in part:
        if s in colour:
            continue
        colour[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for u in part:
                if u != v and not _nbhd_comparable(G, u, v):
                    if u not in colour:
                        colour[u] = 1 - colour[v]
                        stack.append(u)
                    elif colour[u] == colour[v]:
                        return None
    chains = []
    for c in (0, 1):
        members = [v for v in part if colour[v] == c]
        if members:
            chains.append(is_chain_part(G, members))
    return chains


def is_k_chain(G: Graph, B: Bipartition, k: int = 2) -> RecognitionReport:
    """Does each part of ``B`` split into at most ``k`` chains?"""
    if k not in (1, 2):
        raise ValueError("k must be 1 or 2")
    B.validate(G)
    cx = chain_cover(G, B.part_x, k)
    cy = chain_cover(G, B.part_y, k)
    if cx is None or cy is None:
        return RecognitionReport(False)
    return RecognitionReport(True, {"parts": [sorted(B.part_x), sorted(B.part_y)], "chains": [cx, cy]})


def check_chain_certificate(G: Graph, cert: dict, k: int = 2) -> bool:
    px, py = cert["parts"]
    try:
        Bipartition(px, py).validate(G)
    except ValueError:
        return False
    for part, chains in zip((px, py), cert["chains"]):
        if len(chains) > k or sorted(v for c in chains for v in c) != sorted(part):
            return False
        for chain in chains:
            if any(G.adj[u] & ~G.adj[v] for u, v in zip(chain, chain[1:])):
                return False
    return True


def _nontrivial_components(G: Graph) -> int:
    return sum(1 for c in G.components() if len(c) > 1)


def bichain_by_chains(G: Graph) -> RecognitionReport:
    """Structural test: bipartite, with some bipartition whose parts are 2-chain."""
    if not G.is_bipartite():
        return RecognitionReport(False)
    # three nontrivial components put three disjoint nonempty neighbourhoods in each part
    if _nontrivial_components(G) >= 3:
        return RecognitionReport(False)
    for B in all_bipartitions(G):
        rep = is_k_chain(G, B, 2)
        if rep.verdict:
            return rep
    return RecognitionReport(False)


def bichain_by_forbidden(G: Graph) -> RecognitionReport:
    cyc = shortest_odd_cycle(G)
    if cyc is not None:
        return RecognitionReport(False, Embedding(tuple(cyc)), "C%d" % len(cyc))
    hit = find_forbidden(G, BICHAIN_FORBIDDEN)
    if hit is not None:
        return RecognitionReport(False, hit[1], hit[0])
    return RecognitionReport(True)


def is_bichain(G: Graph) -> RecognitionReport:
    by_forbidden = bichain_by_forbidden(G)
    by_chains = bichain_by_chains(G)
    if by_forbidden.verdict != by_chains.verdict:
        raise InternalConsistencyError("bichain recognizers disagree on %r" % (G,))
    if by_chains.verdict:
        return by_chains
    return by_forbidden


def is_chain_graph(G: Graph) -> RecognitionReport:
    """Bipartite with some bipartition whose parts are single chains (2K2-free bipartite)."""
    if not G.is_bipartite():
        cyc = shortest_odd_cycle(G)
        return RecognitionReport(False, Embedding(tuple(cyc)), "C%d" % len(cyc))
    hit = find_forbidden(G, ("2K2",))
    structural = None
    if _nontrivial_components(G) <= 1:
        for B in all_bipartitions(G):
            rep = is_k_chain(G, B, 1)
            if rep.verdict:
                structural = rep
                break
    if (hit is None) != (structural is not None):
        raise InternalConsistencyError("chain recognizers disagree on %r" % (G,))
    if hit is not None:
        return RecognitionReport(False, hit[1], hit[0])
    return structural


# -- split graphs -------------------------------------------------------------------------

def split_partition_by_degrees(G: Graph) -> SplitPartition | None:
    """Degree-sequence split test; the ``m`` highest-degree vertices form the clique."""
    order = sorted(range(G.n), key=lambda v: (-G.degree(v), v))
    deg = [G.degree(v) for v in order]
    m = max((i + 1 for i in range(G.n) if deg[i] >= i), default=0)
    if sum(deg[:m]) != m * (m - 1) + sum(deg[m:]):
        return None
    P = SplitPartition(order[:m], order[m:])
    P.validate(G)
    return P


def is_split(G: Graph) -> SplitPartition | None:
    hit = find_forbidden(G, SPLIT_FORBIDDEN)
    P = split_partition_by_degrees(G)
    if (hit is None) != (P is not None):
        raise InternalConsistencyError("split recognizers disagree on %r" % (G,))
    return P


def split_report(G: Graph) -> RecognitionReport:
    hit = find_forbidden(G, SPLIT_FORBIDDEN)
    P = is_split(G)
    if P is not None:
        return RecognitionReport(True, P)
    return RecognitionReport(False, hit[1], hit[0])


def is_split_permutation(G: Graph) -> RecognitionReport:
    hit = find_forbidden(G, SPLIT_PERMUTATION_FORBIDDEN)
    P = is_split(G)
    structural = P is not None and dilworth_number(G) <= 2
    if (hit is None) != structural:
        raise InternalConsistencyError("split permutation recognizers disagree on %r" % (G,))
    if hit is not None:
        return RecognitionReport(False, hit[1], hit[0])
    return RecognitionReport(True, P, details={"dilworth": dilworth_number(G)})


def check_rejection(G: Graph, report: RecognitionReport) -> bool:
    """The rejection witness is an induced copy of the named forbidden graph."""
    name = report.forbidden
    if name is None or report.witness is None:
        return False
    if name in forbidden_graphs():
        H = forbidden_graphs()[name]
    elif name.startswith("C"):
        H = cycle_graph(int(name[1:]))
    else:
        return False
    return report.witness.is_induced(H, G)
