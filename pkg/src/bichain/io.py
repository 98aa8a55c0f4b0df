"""JSON and DOT serialization.

JSON graph object::

    {"n": 4, "edges": [[0, 1], [1, 2]],
     "parts": [[0, 2], [1, 3]],          # optional bipartition
     "labels": ["white", "black", ...],  # optional, one per vertex
     "coords": [[1, 1], [1, 2], ...]}    # optional grid (column, row) per vertex
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Hashable, Sequence

from .errors import GraphInputError
from .graph import Bipartition, Graph


@dataclass
class GraphRecord:
    graph: Graph
    parts: Bipartition | None = None
    labels: list[Hashable] | None = None
    coords: list[tuple[int, int]] | None = None


def graph_to_json(G: Graph, parts: Bipartition | None = None, labels: Sequence[Hashable] | None = None,
                  coords: Sequence[tuple[int, int]] | None = None) -> dict[str, Any]:
    obj: dict[str, Any] = {"n": G.n, "edges": [[u, v] for u, v in G.edges()]}
    if parts is not None:
        obj["parts"] = [sorted(parts.part_x), sorted(parts.part_y)]
    if labels is not None:
        obj["labels"] = list(labels)
    if coords is not None:
        obj["coords"] = [list(c) for c in coords]
    return obj


def graph_from_json(obj: Any) -> GraphRecord:
    if not isinstance(obj, dict) or "n" not in obj or "edges" not in obj:
        raise GraphInputError("graph JSON needs 'n' and 'edges'")
    n = obj["n"]
    if not isinstance(n, int) or n < 0:
        raise GraphInputError("'n' must be a non-negative integer")
    try:
        edges = [(int(u), int(v)) for u, v in obj["edges"]]
    except (TypeError, ValueError) as exc:
        raise GraphInputError("'edges' must be a list of vertex pairs") from exc
    G = Graph.from_edges(n, edges)
    rec = GraphRecord(G)
    if "parts" in obj:
        px, py = obj["parts"]
        rec.parts = Bipartition(px, py)
        rec.parts.validate(G)
    if "labels" in obj:
        if len(obj["labels"]) != n:
            raise GraphInputError("'labels' must have one entry per vertex")
        rec.labels = list(obj["labels"])
    if "coords" in obj:
        if len(obj["coords"]) != n:
            raise GraphInputError("'coords' must have one entry per vertex")
        rec.coords = [(int(c), int(r)) for c, r in obj["coords"]]
    return rec


def load_graph(path: str | Path) -> GraphRecord:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise GraphInputError("cannot read %s: %s" % (path, exc.strerror)) from exc
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphInputError("%s is not valid JSON: %s" % (path, exc)) from exc
    return graph_from_json(obj)


def save_graph(path: str | Path, G: Graph, **extras) -> None:
    Path(path).write_text(json.dumps(graph_to_json(G, **extras)) + "\n")


def to_dot(G: Graph, coords: Sequence[tuple[int, int]] | None = None,
           labels: Sequence[Hashable] | None = None, name: str = "G") -> str:
    """Undirected DOT text; grid vertices are named ``c{col}r{row}`` and pinned."""
    lines = ["graph %s {" % name]
    names = ["c%dr%d" % c for c in coords] if coords is not None else [str(v) for v in range(G.n)]
    for v in range(G.n):
        attrs = []
        if coords is not None:
            attrs.append('pos="%d,%d!"' % coords[v])
        if labels is not None:
            attrs.append('color="%s"' % labels[v])
        lines.append("  %s%s;" % (names[v], " [%s]" % ", ".join(attrs) if attrs else ""))
    for u, v in G.edges():
        lines.append("  %s -- %s;" % (names[u], names[v]))
    lines.append("}")
    return "\n".join(lines) + "\n"
