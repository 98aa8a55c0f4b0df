"""Labelled induced subgraphs, antichain certificates and the grid-embedding experiments."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .decomposition import is_canonically_prime
from .errors import GraphInputError
from .graph import (Embedding, Graph, LabelledGraph, LabelPoset, all_graphs, colour_bipartition,
                    find_embedding, iter_embeddings)
from .grids import GridGraph, x_grid, z_grid


def labelled_embeds(H: LabelledGraph, G: LabelledGraph, P: LabelPoset | None = None) -> Embedding | None:
    """An induced embedding with ``label(v) <= label(image)`` in ``P``."""
    P = P or G.poset
    elems = set(P.elements)
    for lab in H.labels + G.labels:
        if lab not in elems:
            raise GraphInputError("label %r is not in the label poset" % (lab,))
    cand = []
    for a in H.labels:
        mask = 0
        for w, b in enumerate(G.labels):
            if P.leq(a, b):
                mask |= 1 << w
        cand.append(mask)
    return find_embedding(H.graph, G.graph, cand)


@dataclass
class AntichainCertificate:
    graphs: list[LabelledGraph]
    matrix: list[list[Embedding | None]] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return all(self.matrix[i][j] is None for i in range(len(self.graphs))
                   for j in range(len(self.graphs)) if i != j)

    def to_json(self) -> dict[str, Any]:
        return {"valid": self.valid, "sizes": [g.graph.n for g in self.graphs],
                "matrix": [[None if e is None else list(e.mapping) for e in row] for row in self.matrix]}


def verify_antichain(graphs, P: LabelPoset | None = None) -> AntichainCertificate:
    graphs = list(graphs)
    cert = AntichainCertificate(graphs)
    for H in graphs:
        cert.matrix.append([labelled_embeds(H, G, P) for G in graphs])
    return cert


# -- column structure --------------------------------------------------------------------

def columns_occupied(emb: Embedding, host: GridGraph) -> set[int]:
    if not isinstance(host, GridGraph):
        raise GraphInputError("host has no grid coordinates")
    return {host.coord(w)[0] for w in emb.mapping}


def is_interval(cols) -> bool:
    cols = set(cols)
    return not cols or max(cols) - min(cols) + 1 == len(cols)


def s_pairs_consecutive(emb: Embedding, j: int, k: int) -> bool:
    """Does ``S_j -> S_k`` send each pair ``{x_i, y_i}`` onto one pair, the pairs forming an interval?"""
    targets = []
    for i in range(j):
        a, b = emb[i], emb[j + i]
        if a % k != b % k or a == b:
            return False
        targets.append(a % k)
    return is_interval(targets) and len(set(targets)) == j


def embed_in_bounded_columns(G: Graph, width: int, max_rows: int | None = None) -> tuple[GridGraph, Embedding] | None:
    """First ``z_grid(width, rows)`` (``rows = 1, 2, ...``) that ``G`` embeds into.

    ``max_rows`` defaults to ``2 * |V(G)|``.
    """
    if width < 1:
        raise GraphInputError("width must be positive")
    max_rows = 2 * max(G.n, 1) if max_rows is None else max_rows
    for rows in range(1, max_rows + 1):
        host = z_grid(width, rows)
        emb = find_embedding(G, host.graph)
        if emb is not None:
            return host, emb
    return None


def minimal_column_width(G: Graph, max_width: int, max_rows: int | None = None) -> int | None:
    for width in range(1, max_width + 1):
        if embed_in_bounded_columns(G, width, max_rows) is not None:
            return width
    return None


def canonically_prime_bichain_graphs(max_n: int) -> list[Graph]:
    from .classes import is_bichain
    out = []
    for n in range(1, max_n + 1):
        for G in all_graphs(n):
            if G.is_bipartite() and is_canonically_prime(G, colour_bipartition(G)) and is_bichain(G).verdict:
                out.append(G)
    return out


def interval_report(graphs, host: GridGraph) -> list[dict[str, Any]]:
    """For each graph, count embeddings into ``host`` and those whose columns are not an interval."""
    rows = []
    for G in graphs:
        total = bad = 0
        for emb in iter_embeddings(G, host.graph):
            total += 1
            if not is_interval(columns_occupied(emb, host)):
                bad += 1
        rows.append({"n": G.n, "edges": [list(e) for e in G.edges()], "embeddings": total, "non_interval": bad})
    return rows


# -- X-grid embeddings -----------------------------------------------------------------

@dataclass
class ColumnStructureReport:
    n: int
    host_cols: int
    host_rows: int
    checked: int = 0
    failures: list[tuple[int, ...]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict[str, Any]:
        return {"n": self.n, "host": [self.host_cols, self.host_rows], "checked": self.checked,
                "failures": len(self.failures), "pass": self.passed}


def aligned_square(host: GridGraph, image: list[int], n: int) -> tuple[int, bool] | None:
    """Find ``x_grid(n, n)`` inside ``image`` with pattern column ``c`` in host
    column ``h + c - 1`` (or ``h + n - c`` when reversed).  Returns ``(h, reversed)``."""
    square = x_grid(n, n)
    img = 0
    for w in image:
        img |= 1 << w
    for h in range(1, host.cols - n + 2):
        for rev in (False, True):
            cand = []
            for v in range(square.graph.n):
                c = square.coord(v)[0]
                col = h + n - c if rev else h + c - 1
                cand.append(host.column_mask(col) & img)
            if find_embedding(square.graph, host.graph, cand) is not None:
                return h, rev
    return None


def x_embedding_column_structure(n: int, M: int, N: int, budget: int) -> ColumnStructureReport:
    """Check the first ``budget`` embeddings of ``x_grid(n, 4n-1)`` into ``x_grid(M, N)``."""
    if M < n or N < 4 * n - 1:
        raise GraphInputError("need M >= n and N >= 4n-1")
    pattern = x_grid(n, 4 * n - 1)
    host = x_grid(M, N)
    report = ColumnStructureReport(n, M, N)
    for emb in iter_embeddings(pattern.graph, host.graph):
        if report.checked >= budget:
            break
        report.checked += 1
        if aligned_square(host, emb.image(), n) is None:
            report.failures.append(emb.mapping)
    return report
