"""Registry of named verification checks.

A check is a function returning ``(passed, details)``.  Checks register
under a name with :func:`check`; :func:`run_suite` times them and builds the
report ``{"suite": name, "checks": [{"name", "pass", "millis", ...}]}``.
Default parameters are the acceptance sizes.
"""

from __future__ import annotations

import random
import time
from typing import Any, Callable

from . import classes, decomposition, grids, letters, transforms, width, wqo
from .graph import all_bipartitions, all_graphs, find_embedding, induced_subgraph, iter_embeddings, random_graph

REGISTRY: dict[str, Callable[..., tuple[bool, dict]]] = {}


def check(name: str):
    def register(fn):
        REGISTRY[name] = fn
        return fn
    return register


def run_check(name: str, **params) -> dict[str, Any]:
    if name not in REGISTRY:
        raise KeyError(name)
    start = time.perf_counter()
    ok, details = REGISTRY[name](**params)
    return {"name": name, "pass": bool(ok), "millis": round(1000 * (time.perf_counter() - start), 1),
            "details": details}


def run_suite(name: str, **params) -> dict[str, Any]:
    names = list(REGISTRY) if name == "all" else [name]
    checks = [run_check(n, **(params if name != "all" else {})) for n in names]
    return {"suite": name, "pass": all(c["pass"] for c in checks), "checks": checks}


# -- the checks ---------------------------------------------------------------------------

@check("pivot-lemma")
def pivot_lemma(max_n: int = 5):
    bad = [n for n in range(1, max_n + 1)
           if transforms.pivot_x_to_y(n)[0] != grids.y_grid(2 * n, 2 * n).graph]
    return not bad, {"sizes": max_n, "failed": bad}


@check("zy-embedding")
def zy_embedding(min_n: int = 2, max_n: int = 4):
    bad = []
    for n in range(min_n, max_n + 1):
        for direction in (grids.Z_INTO_Y, grids.Y_INTO_Z):
            try:
                emb = grids.zy_cross_embedding(n, direction)
            except AssertionError:
                bad.append([n, direction])
                continue
            if direction == grids.Z_INTO_Y and any(w % (2 * n) == 0 for w in emb.mapping):
                bad.append([n, "row 1"])
    return not bad, {"failed": bad}


@check("universality")
def universality(n: int = 5):
    host = grids.z_grid(n, n).graph
    count, bad = 0, []
    for m in range(1, n + 1):
        for G in all_graphs(m):
            if classes.is_bichain(G).verdict:
                count += 1
                if find_embedding(G, host) is None:
                    bad.append(G.edges())
    return not bad, {"bichain_classes": count, "failed": bad}


@check("x-universality")
def x_universality(samples: int = 500, seed: int = 1):
    rng = random.Random(seed)
    big = grids.x_grid(10, 10).graph
    small = grids.x_grid(5, 5).graph
    bad = 0
    for _ in range(samples):
        H = induced_subgraph(big, rng.sample(range(big.n), 5))
        if find_embedding(H, small) is None:
            bad += 1
    return bad == 0, {"samples": samples, "failed": bad}


@check("letters")
def letter_encodings(max_z: int = 8, max_zsplit: int = 6):
    bad = []
    for c in range(1, max_z + 1):
        for r in range(1, max_z + 1):
            fams = [("z", letters.z_letter_encoding, grids.z_grid)]
            if c <= max_zsplit and r <= max_zsplit:
                fams.append(("zsplit", letters.zsplit_letter_encoding, grids.zsplit_grid))
            for fam, enc, gen in fams:
                D = letters.decode_letter_graph(enc(c, r))
                G = gen(c, r).graph
                if D.num_edges != G.num_edges or not letters.position_map(c, r).is_induced(D, G):
                    bad.append([fam, c, r])
    return not bad, {"failed": bad}


@check("rankwidth-invariance")
def rankwidth_invariance(graphs: int = 200, max_n: int = 7, seed: int = 2):
    rng = random.Random(seed)
    bad, moves = [], 0
    for _ in range(graphs):
        G = random_graph(rng.randint(2, max_n), rng.choice([0.3, 0.5, 0.7]), rng)
        r = width.rank_width(G)
        others = [transforms.local_complement(G, v) for v in range(G.n)]
        others += [transforms.pivot(G, u, v) for u, v in G.edges()]
        moves += len(others)
        if any(width.rank_width(H) != r for H in others):
            bad.append(G.edges())
    return not bad, {"graphs": graphs, "moves": moves, "failed": bad}


@check("sandwich")
def sandwich(max_all: int = 5, random_count: int = 150, random_n: int = 6, seed: int = 3):
    rng = random.Random(seed)
    pool = [G for m in range(1, max_all + 1) for G in all_graphs(m)]
    pool += [random_graph(random_n, 0.5, rng) for _ in range(random_count)]
    bad = []
    for G in pool:
        r, c = width.rank_width(G), width.clique_width(G)
        if not r <= c <= 2 ** (r + 1) - 1:
            bad.append(G.edges())
    return not bad, {"graphs": len(pool), "failed": bad}


@check("chain-cliquewidth")
def chain_cliquewidth(max_expr: int = 12, max_exact: int = 4):
    bad = []
    for n in range(1, max_expr + 1):
        expr = width.chain_3expression(n)
        if expr.to_graph() != grids.chain_universal(n)[0] or len(expr.labels_used()) > 3:
            bad.append(["expression", n])
    for n in range(1, max_exact + 1):
        if width.clique_width(grids.chain_universal(n)[0]) > 3:
            bad.append(["exact", n])
    return not bad, {"failed": bad}


@check("recognizers")
def recognizers(max_n: int = 7):
    counts = {"split": 0, "bipartite": 0, "split_partitions": 0}
    bad = []
    for m in range(1, max_n + 1):
        for G in all_graphs(m):
            P = classes.is_split(G)
            if P is not None:
                counts["split"] += 1
                free = classes.find_forbidden(G, classes.SPLIT_PERMUTATION_FORBIDDEN) is None
                if free != (classes.dilworth_number(G) <= 2):
                    bad.append(["dilworth", G.edges()])
                sp = classes.is_split_permutation(G).verdict
                for Q in transforms.split_partitions(G):
                    counts["split_partitions"] += 1
                    star = transforms.split_bipartite_transform(G, Q)
                    if sp != classes.is_bichain(star).verdict:
                        bad.append(["star", G.edges()])
            if G.is_bipartite():
                counts["bipartite"] += 1
                by_forbidden = classes.bichain_by_forbidden(G).verdict
                by_chains = any(classes.is_k_chain(G, B, 2).verdict for B in all_bipartitions(G))
                if by_forbidden != by_chains:
                    bad.append(["bichain", G.edges()])
    return not bad, {**counts, "failed": bad}


@check("antichain")
def antichain(s_from: int = 3, s_to: int = 8, t_from: int = 3, t_to: int = 6, pairs_from: int = 3,
              pairs_to: int = 7):
    details: dict[str, Any] = {}
    details["scirc"] = wqo.verify_antichain([grids.s_circ(k) for k in range(s_from, s_to + 1)]).valid
    details["tcirc"] = wqo.verify_antichain([grids.t_circ(k) for k in range(t_from, t_to + 1)]).valid
    embed_ok, pairs_ok, checked = True, True, 0
    for k in range(pairs_from, pairs_to + 1):
        for j in range(pairs_from, k + 1):
            embs = list(_s_embeddings(j, k))
            embed_ok &= bool(embs)
            if j < k:
                checked += len(embs)
                pairs_ok &= all(wqo.s_pairs_consecutive(e, j, k) for e in embs)
    details.update(unlabelled_embeds=embed_ok, consecutive_pairs=pairs_ok, embeddings_checked=checked)
    return all([details["scirc"], details["tcirc"], embed_ok, pairs_ok]), details


def _s_embeddings(j: int, k: int):
    return iter_embeddings(grids.s_graph(j).graph, grids.s_graph(k).graph)


@check("column-intervals")
def column_intervals(max_n: int = 6, cols: int = 6, rows: int = 6):
    rows_out = wqo.interval_report(wqo.canonically_prime_bichain_graphs(max_n), grids.z_grid(cols, rows))
    return all(r["non_interval"] == 0 for r in rows_out), {"graphs": rows_out}


@check("x-columns")
def x_columns(n: int = 2, M: int = 4, N: int = 9, budget: int = 10 ** 5):
    report = wqo.x_embedding_column_structure(n, M, N, budget)
    return report.passed, report.to_json()


@check("decomposition")
def decomposition_check(max_n: int = 7):
    cases, bad = 0, []
    for m in range(1, max_n + 1):
        for G in all_graphs(m):
            if not G.is_bipartite():
                continue
            for B in all_bipartitions(G):
                cases += 1
                tree = decomposition.canonical_decompose(G, B)
                if tree.recompose(G, B) != decomposition.Piece.of(G, B):
                    bad.append(["recompose", G.edges()])
                if decomposition.is_canonically_prime(G, B) != decomposition.is_canonically_prime_bruteforce(G, B):
                    bad.append(["prime", G.edges()])
    return not bad, {"cases": cases, "failed": bad}


ACCEPTANCE = [
    "pivot-lemma", "zy-embedding", "universality", "x-universality", "letters", "rankwidth-invariance",
    "sandwich", "chain-cliquewidth", "recognizers", "antichain", "column-intervals", "x-columns",
    "decomposition",
]
