"""Exact cut-rank, rank-width and clique-width for small graphs.

Rank-width uses the subset recurrence
``best(S) = max(cutrank(S), min over splits S = A + B of max(best(A), best(B)))``
over all vertex subsets, so it costs about ``3**n`` steps.

Clique-width is decided by a dynamic program over states ``(S, pi)`` where
``S`` is the vertex set built so far and ``pi`` is the partition of ``S`` into
label classes.  Two facts keep the state space small:

* vertices sharing a label receive identical edges from now on, so every
  class must have the same neighbourhood outside ``S``;
* a join whose edges all belong to ``G`` may as well be applied as early as
  possible, so the edges present at state ``(S, pi)`` are exactly ``G[S]``.

A state for ``S`` arises from states for a split ``S = S1 + S2``: union them
(optionally giving one class of each side a common label), join every pair of
classes that a crossing edge needs, then relabel to any coarser partition
whose classes still agree outside ``S``.  Iterating over ``k`` gives the least
``k`` for which some state covers ``V(G)``.  Back-pointers rebuild a
``k``-expression that evaluates to ``G`` itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Any, Iterable

from .errors import CapacityError, GraphInputError
from .graph import Graph, bits_to_mask, iter_bits

RANK_WIDTH_CEILING = 14
CLIQUE_WIDTH_CEILING = 8


# -- cut-rank -----------------------------------------------------------------------

def gf2_rank(rows: Iterable[int]) -> int:
    basis: list[int] = []
    for row in rows:
        for b in basis:
            row = min(row, row ^ b)
        if row:
            basis.append(row)
    return len(basis)


def cutrank(G: Graph, A: Iterable[int] | int) -> int:
    """GF(2) rank of the adjacency matrix between ``A`` and ``V - A``."""
    mask = A if isinstance(A, int) else bits_to_mask(A)
    if mask & ~G.full_mask:
        raise GraphInputError("cut side is not a subset of the vertex set")
    rest = G.full_mask & ~mask
    return gf2_rank(G.adj[v] & rest for v in iter_bits(mask))


# -- rank-width ---------------------------------------------------------------------

def _subsets_by_size(n: int) -> list[int]:
    return sorted(range(1, 1 << n), key=lambda s: bin(s).count("1"))


def rank_decomposition(G: Graph, ceiling: int = RANK_WIDTH_CEILING) -> tuple[int, Any]:
    """Return ``(rank-width, layout)``.

    The layout is a nested pair structure: a leaf is a vertex id, an inner
    node is ``(left, right)``.  Each node stands for the tree edge above it.
    """
    n = G.n
    if n > ceiling:
        raise CapacityError("rank-width DP is limited to %d vertices (got %d)" % (ceiling, n))
    if n == 0:
        return 0, None
    if n == 1:
        return 0, 0
    cr = [0] * (1 << n)
    for s in range(1, 1 << n):
        cr[s] = cutrank(G, s)
    best = [0] * (1 << n)
    choice = [0] * (1 << n)
    for s in _subsets_by_size(n):
        if s & (s - 1) == 0:
            best[s] = cr[s]
            continue
        low = s & -s
        rest = s ^ low
        inner = 1 << 30
        arg = 0
        # A ranges over proper subsets of s containing the lowest vertex
        sub = rest
        while True:
            a = sub | low
            if a != s:
                w = max(best[a], best[s ^ a])
                if w < inner:
                    inner, arg = w, a
            if sub == 0:
                break
            sub = (sub - 1) & rest
        best[s] = max(cr[s], inner)
        choice[s] = arg

    def build(s: int):
        if s & (s - 1) == 0:
            return s.bit_length() - 1
        a = choice[s]
        return (build(a), build(s ^ a))

    full = G.full_mask
    return best[full], build(full)


def rank_width(G: Graph, ceiling: int = RANK_WIDTH_CEILING) -> int:
    return rank_decomposition(G, ceiling)[0]


def layout_width(G: Graph, layout: Any) -> int:
    """Largest cut-rank over the edges of a layout tree (independent re-check)."""
    widths = []

    def walk(node) -> int:
        if isinstance(node, int):
            mask = 1 << node
        else:
            mask = walk(node[0]) | walk(node[1])
        widths.append(cutrank(G, mask))
        return mask

    if layout is None:
        return 0
    walk(layout)
    return max(widths)


# -- clique-width expressions ---------------------------------------------------------
#
# Terms are nested tuples:
#   ("create", v, i)        new vertex v with label i
#   ("union", t1, t2)
#   ("join", i, j, t)       all edges between labels i != j
#   ("relabel", i, j, t)    label i becomes j

@dataclass(frozen=True)
class CliqueWidthExpression:
    term: tuple
    k: int

    def labels_used(self) -> set[int]:
        used: set[int] = set()
        stack = [self.term]
        while stack:
            t = stack.pop()
            op = t[0]
            if op == "create":
                used.add(t[2])
            elif op == "union":
                stack.extend(t[1:])
            else:
                used.update(t[1:3])
                stack.append(t[3])
        return used

    def evaluate(self) -> tuple[dict[int, int], set[frozenset[int]]]:
        """Return ``(vertex -> label, edge set)`` of the term."""
        return _evaluate(self.term)

    def to_graph(self) -> Graph:
        labels, edges = self.evaluate()
        n = len(labels)
        if set(labels) != set(range(n)):
            raise GraphInputError("expression vertices are not 0..%d" % (n - 1))
        return Graph.from_edges(n, [tuple(e) for e in edges])

    def is_valid(self) -> bool:
        return all(1 <= i <= self.k for i in self.labels_used())

    def to_json(self) -> Any:
        return _term_to_json(self.term)

    @classmethod
    def from_json(cls, obj: Any, k: int) -> "CliqueWidthExpression":
        return cls(_term_from_json(obj), k)


def _evaluate(term) -> tuple[dict[int, int], set[frozenset[int]]]:
    op = term[0]
    if op == "create":
        return {term[1]: term[2]}, set()
    if op == "union":
        l1, e1 = _evaluate(term[1])
        l2, e2 = _evaluate(term[2])
        if set(l1) & set(l2):
            raise GraphInputError("union of terms sharing a vertex")
        l1.update(l2)
        return l1, e1 | e2
    i, j = term[1], term[2]
    labels, edges = _evaluate(term[3])
    if op == "join":
        if i == j:
            raise GraphInputError("join needs two distinct labels")
        a = [v for v, lab in labels.items() if lab == i]
        b = [v for v, lab in labels.items() if lab == j]
        edges |= {frozenset((x, y)) for x in a for y in b}
    elif op == "relabel":
        labels = {v: (j if lab == i else lab) for v, lab in labels.items()}
    else:
        raise GraphInputError("unknown operation %r" % (op,))
    return labels, edges


def _term_to_json(term):
    if term[0] == "create":
        return list(term)
    if term[0] == "union":
        return ["union", _term_to_json(term[1]), _term_to_json(term[2])]
    return [term[0], term[1], term[2], _term_to_json(term[3])]


def _term_from_json(obj):
    if obj[0] == "create":
        return ("create", int(obj[1]), int(obj[2]))
    if obj[0] == "union":
        return ("union", _term_from_json(obj[1]), _term_from_json(obj[2]))
    return (obj[0], int(obj[1]), int(obj[2]), _term_from_json(obj[3]))


# -- exact clique-width ----------------------------------------------------------------

def _coarsenings(classes: tuple[int, ...]):
    """All set partitions obtained by merging the given classes."""
    if not classes:
        yield ()
        return
    first, rest = classes[0], classes[1:]
    for sub in _coarsenings(rest):
        yield (first,) + sub
        for idx in range(len(sub)):
            yield sub[:idx] + (sub[idx] | first,) + sub[idx + 1:]


def _canon(classes) -> tuple[int, ...]:
    return tuple(sorted(classes))


def _matchings(a: int, b: int):
    """Partial injective maps from range(a) to range(b), as lists of pairs."""
    for size in range(min(a, b) + 1):
        for left in combinations(range(a), size):
            for right in permutations(range(b), size):
                yield list(zip(left, right))


class _CliqueWidthSearch:
    def __init__(self, G: Graph, k: int):
        self.G = G
        self.k = k
        self.full = G.full_mask
        # reach[S] maps canonical partition -> back-pointer
        self.reach: dict[int, dict[tuple[int, ...], Any]] = {}

    def homogeneous(self, cls: int, outside: int) -> bool:
        adj = self.G.adj
        it = iter_bits(cls)
        sig = adj[next(it)] & outside
        return all(adj[v] & outside == sig for v in it)

    def complete(self, p: int, q: int) -> bool:
        adj = self.G.adj
        return all(adj[v] & q == q for v in iter_bits(p))

    def run(self) -> bool:
        G = self.G
        n = G.n
        for s in _subsets_by_size(n):
            if s & (s - 1) == 0:
                self.reach[s] = {(s,): ("leaf", s.bit_length() - 1)}
                continue
            states: dict[tuple[int, ...], Any] = {}
            outside = self.full & ~s
            low = s & -s
            rest = s ^ low
            sub = rest
            while sub:
                sub = (sub - 1) & rest
                s1 = sub | low
                s2 = s ^ s1
                r1 = self.reach.get(s1)
                r2 = self.reach.get(s2)
                if r1 and r2:
                    for p1 in r1:
                        for p2 in r2:
                            self._combine(s, outside, s1, p1, s2, p2, states)
            if states:
                self.reach[s] = states
        return self.full in self.reach

    def _combine(self, s, outside, s1, p1, s2, p2, states):
        k = self.k
        adj = self.G.adj
        # crossing requirement between class a of p1 and class b of p2
        cross = [[bool(adj[next(iter_bits(a))] & b) for b in p2] for a in p1]
        for match in _matchings(len(p1), len(p2)):
            size = len(p1) + len(p2) - len(match)
            if size > k:
                continue
            bad = False
            for a, b in match:
                if cross[a][b] or not self.homogeneous(p1[a] | p2[b], outside):
                    bad = True
                    break
            if bad:
                continue
            owner1 = list(range(len(p1)))
            owner2 = [None] * len(p2)
            sigma = list(p1)
            for a, b in match:
                owner2[b] = a
                sigma[a] |= p2[b]
            for b in range(len(p2)):
                if owner2[b] is None:
                    owner2[b] = len(sigma)
                    sigma.append(p2[b])
            joins = set()
            for a in range(len(p1)):
                for b in range(len(p2)):
                    if cross[a][b]:
                        pa, pb = owner1[a], owner2[b]
                        if not self.complete(sigma[pa], sigma[pb]):
                            bad = True
                            break
                        joins.add((min(pa, pb), max(pa, pb)))
                if bad:
                    break
            if bad:
                continue
            sig = tuple(sigma)
            for coarse in _coarsenings(sig):
                if all(self.homogeneous(c, outside) for c in coarse):
                    key = _canon(coarse)
                    if key not in states:
                        states[key] = ("union", s1, p1, s2, p2, match, sig, tuple(sorted(joins)))

    def expression(self) -> CliqueWidthExpression:
        full = self.full
        part = next(iter(self.reach[full]))
        target = {c: i + 1 for i, c in enumerate(part)}
        return CliqueWidthExpression(self._build(full, part, target), self.k)

    def _build(self, s, part, target):
        ptr = self.reach[s][part]
        if ptr[0] == "leaf":
            return ("create", ptr[1], target[s])
        _, s1, p1, s2, p2, match, sigma, joins = ptr
        # every final class gets one representative sigma class carrying its label
        spare = [i for i in range(1, self.k + 1) if i not in set(target.values())]
        sigma_label = [0] * len(sigma)
        pending = []
        for cls, lab in target.items():
            members = [t for t, sc in enumerate(sigma) if sc & cls]
            sigma_label[members[0]] = lab
            for t in members[1:]:
                sigma_label[t] = spare.pop()
                pending.append((sigma_label[t], lab))
        t1 = {c: sigma_label[next(t for t, sc in enumerate(sigma) if sc & c)] for c in p1}
        t2 = {c: sigma_label[next(t for t, sc in enumerate(sigma) if sc & c)] for c in p2}
        term = ("union", self._build(s1, p1, t1), self._build(s2, p2, t2))
        for a, b in joins:
            term = ("join", sigma_label[a], sigma_label[b], term)
        for old, new in pending:
            term = ("relabel", old, new, term)
        return term


def clique_width_expression(G: Graph, max_k: int | None = None,
                            ceiling: int = CLIQUE_WIDTH_CEILING) -> CliqueWidthExpression | None:
    """A minimum-label expression for ``G``; ``None`` if more than ``max_k`` labels are needed."""
    if G.n > ceiling:
        raise CapacityError("exact clique-width is limited to %d vertices (got %d)" % (ceiling, G.n))
    if G.n == 0:
        return None
    limit = G.n if max_k is None else min(max_k, G.n)
    for k in range(1, limit + 1):
        search = _CliqueWidthSearch(G, k)
        if search.run():
            return search.expression()
    return None


def clique_width(G: Graph, ceiling: int = CLIQUE_WIDTH_CEILING) -> int:
    if G.n == 0:
        return 0
    expr = clique_width_expression(G, ceiling=ceiling)
    return expr.k


def has_k_expression(G: Graph, k: int, ceiling: int = CLIQUE_WIDTH_CEILING) -> bool:
    if G.n > ceiling:
        raise CapacityError("exact clique-width is limited to %d vertices (got %d)" % (ceiling, G.n))
    return G.n == 0 or (k >= 1 and _CliqueWidthSearch(G, k).run())


def chain_3expression(n: int) -> CliqueWidthExpression:
    """Expression for ``chain_universal(n)`` using labels 1-3 (1-2 when ``n == 1``).

    ``b_t`` is added with label 1, ``a_t`` with label 2, labels 1 and 2 are
    joined (so ``a_t`` sees ``b_1..b_t``), and ``a_t`` is retired to label 3.
    """
    if n < 1:
        raise GraphInputError("n must be positive")
    term = None
    for t in range(n):
        step = ("union", ("create", n + t, 1), ("create", t, 2))
        term = step if term is None else ("union", term, step)
        term = ("join", 1, 2, term)
        if n > 1:
            term = ("relabel", 2, 3, term)
    return CliqueWidthExpression(term, 3 if n > 1 else 2)
