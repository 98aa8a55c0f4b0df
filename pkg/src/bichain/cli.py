"""Command-line entry point.

Exit codes: 0 success or true verdict, 1 false verdict or failed suite,
2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import classes, decomposition, grids, letters, suites, transforms, width, wqo
from .errors import CapacityError, GraphInputError, PreconditionError
from .graph import colour_bipartition, cycle_graph, path_graph
from .io import graph_to_json, load_graph, to_dot


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _generate(args) -> tuple[int, dict]:
    fam = args.family
    if fam in grids.GENERATORS:
        g = grids.GENERATORS[fam](args.n, args.k if args.k is not None else args.n)
        extra = {"coords": g.coords}
        if fam != "zsplit":
            extra["parts"] = grids.odd_even_bipartition(g)
        return 0, graph_to_json(g.graph, **extra)
    if fam == "chain":
        G, B = grids.chain_universal(args.n)
        return 0, graph_to_json(G, parts=B)
    if fam == "s":
        S = grids.s_graph(args.n)
        return 0, graph_to_json(S.graph, parts=S.bipartition())
    if fam in ("scirc", "tcirc"):
        L = grids.s_circ(args.n) if fam == "scirc" else grids.t_circ(args.n)
        return 0, graph_to_json(L.graph, labels=L.labels)
    if fam == "t":
        return 0, graph_to_json(grids.t_graph(args.n))
    if fam == "path":
        return 0, graph_to_json(path_graph(args.n))
    return 0, graph_to_json(cycle_graph(args.n))


def _witness_json(rep: classes.RecognitionReport):
    w = rep.witness
    if w is None:
        return None
    if hasattr(w, "mapping"):
        return list(w.mapping)
    if isinstance(w, transforms.SplitPartition):
        return {"clique": sorted(w.clique), "independent": sorted(w.independent)}
    return w


def _recognize(args) -> tuple[int, dict]:
    G = load_graph(args.file).graph
    if args.cls == "bichain":
        rep = classes.is_bichain(G)
    elif args.cls == "chain":
        rep = classes.is_chain_graph(G)
    elif args.cls == "split":
        rep = classes.split_report(G)
    else:
        rep = classes.is_split_permutation(G)
    out = {"class": args.cls, "verdict": rep.verdict, "forbidden": rep.forbidden, "witness": _witness_json(rep)}
    return (0 if rep.verdict else 1), out


def _transform(args) -> tuple[int, dict]:
    if args.op == "pivot-xy":
        G, trace = transforms.pivot_x_to_y(args.n)
        equal = G == grids.y_grid(2 * args.n, 2 * args.n).graph
        return (0 if equal else 1), {"graph": graph_to_json(G), "pivots": trace.edges, "equals_y_grid": equal}
    if args.file is None:
        raise _UsageError("transform %s needs a graph file" % args.op)
    rec = load_graph(args.file)
    G = rec.graph
    if args.op == "local":
        H = transforms.local_complement(G, args.u)
    elif args.op == "pivot":
        H = transforms.pivot(G, args.u, args.v)
    elif args.op == "split-to-bip":
        P = classes.is_split(G)
        if P is None:
            raise PreconditionError("graph is not split")
        return 0, graph_to_json(transforms.split_bipartite_transform(G, P), parts=P.as_bipartition())
    else:
        if rec.parts is None:
            raise PreconditionError("bip-to-split needs 'parts' in the graph file")
        H = transforms.bipartite_split_transform(G, rec.parts, args.side)
    return 0, graph_to_json(H)


def _width(args) -> tuple[int, dict]:
    G = load_graph(args.file).graph
    if args.measure == "rank":
        w, layout = width.rank_decomposition(G)
        return 0, {"rank_width": w, "layout": layout}
    expr = width.clique_width_expression(G)
    return 0, {"clique_width": expr.k, "expression": expr.to_json()}


def _decompose(args) -> tuple[int, dict]:
    rec = load_graph(args.file)
    G = rec.graph
    B = rec.parts
    if B is None:
        if not G.is_bipartite():
            raise PreconditionError("graph is not bipartite")
        B = colour_bipartition(G)
    tree = decomposition.canonical_decompose(G, B)
    return 0, {"prime": decomposition.is_canonically_prime(G, B), "tree": tree.to_json()}


def _letters(args) -> tuple[int, dict]:
    if args.action == "decode":
        if args.file is None:
            raise _UsageError("letters decode needs a system file")
        try:
            obj = json.loads(Path(args.file).read_text())
        except OSError as exc:
            raise GraphInputError("cannot read %s" % args.file) from exc
        except json.JSONDecodeError as exc:
            raise GraphInputError("%s is not valid JSON" % args.file) from exc
        return 0, graph_to_json(letters.decode_letter_graph(letters.LetterSystem.from_json(obj)))
    enc = letters.z_letter_encoding if args.action == "encode-z" else letters.zsplit_letter_encoding
    return 0, enc(args.n, args.k).to_json()


def _wqo(args) -> tuple[int, dict]:
    if args.action == "antichain":
        make = grids.s_circ if args.family == "scirc" else grids.t_circ
        cert = wqo.verify_antichain([make(k) for k in range(args.lo, args.hi + 1)])
        return (0 if cert.valid else 1), cert.to_json()
    if args.action in ("intervals", "lemma55"):
        res = suites.run_check("column-intervals", max_n=args.max_n)
    else:
        res = suites.run_check("x-columns", n=args.n, M=2 * args.n, N=4 * args.n + 1, budget=args.budget)
    return (0 if res["pass"] else 1), res


def _verify(args) -> tuple[int, dict]:
    params = {}
    if args.max_n is not None:
        params["max_n"] = args.max_n
    if args.suite != "all" and args.suite not in suites.REGISTRY:
        raise _UsageError("unknown suite %r; choose from all, %s" % (args.suite, ", ".join(suites.REGISTRY)))
    try:
        report = suites.run_suite(args.suite, **params)
    except TypeError as exc:
        raise _UsageError(str(exc)) from exc
    return (0 if report["pass"] else 1), report


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="bichain", description="Bichain graphs, grids and their experiments.")
    p.add_argument("--json", action="store_true", help="print the full JSON result")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="write a graph family member as JSON")
    g.add_argument("family", choices=list(grids.GENERATORS) + ["chain", "s", "t", "scirc", "tcirc", "path", "cycle"])
    g.add_argument("--n", type=int, required=True, help="columns for grids, size otherwise")
    g.add_argument("--k", type=int, help="rows for grids (default: --n)")
    g.add_argument("-o", "--output")
    g.add_argument("--dot", action="store_true", help="emit DOT instead of JSON")
    g.set_defaults(func=_generate)

    r = sub.add_parser("recognize", help="class membership with witness")
    r.add_argument("cls", choices=["bichain", "splitperm", "split", "chain"])
    r.add_argument("file")
    r.set_defaults(func=_recognize)

    t = sub.add_parser("transform", help="local complement, pivot, split/bipartite transforms")
    t.add_argument("op", choices=["local", "pivot", "pivot-xy", "split-to-bip", "bip-to-split"])
    t.add_argument("file", nargs="?")
    t.add_argument("--u", type=int, default=0)
    t.add_argument("--v", type=int, default=1)
    t.add_argument("--n", type=int, default=1)
    t.add_argument("--side", type=int, choices=[0, 1], default=0)
    t.set_defaults(func=_transform)

    w = sub.add_parser("width", help="exact rank-width or clique-width")
    w.add_argument("measure", choices=["rank", "clique"])
    w.add_argument("file")
    w.set_defaults(func=_width)

    d = sub.add_parser("decompose", help="canonical decomposition tree")
    d.add_argument("file")
    d.set_defaults(func=_decompose)

    lt = sub.add_parser("letters", help="letter graphs")
    lt.add_argument("action", choices=["decode", "encode-z", "encode-zsplit"])
    lt.add_argument("file", nargs="?")
    lt.add_argument("--n", type=int, default=1, help="grid columns (alphabet size)")
    lt.add_argument("--k", type=int, default=1, help="grid rows (word repetitions)")
    lt.set_defaults(func=_letters)

    q = sub.add_parser("wqo", help="antichains and grid-embedding experiments")
    # the last two are aliases of intervals and x-columns
    q.add_argument("action", choices=["antichain", "intervals", "x-columns", "lemma55", "lemma33"])
    q.add_argument("--family", choices=["scirc", "tcirc"], default="scirc")
    q.add_argument("--from", dest="lo", type=int, default=3)
    q.add_argument("--to", dest="hi", type=int, default=8)
    q.add_argument("--max-n", type=int, default=6)
    q.add_argument("--n", type=int, default=2)
    q.add_argument("--budget", type=int, default=10 ** 5)
    q.set_defaults(func=_wqo)

    v = sub.add_parser("verify", help="run a named verification suite")
    v.add_argument("suite")
    v.add_argument("--max-n", type=int)
    v.set_defaults(func=_verify)
    return p


def _summary(command: str, result: dict) -> str:
    if command == "verify":
        lines = ["%s %s (%.0f ms)" % ("PASS" if c["pass"] else "FAIL", c["name"], c["millis"])
                 for c in result["checks"]]
        return "\n".join(lines)
    if "verdict" in result:
        return "%s: %s" % (result["class"], "yes" if result["verdict"] else "no (%s)" % result["forbidden"])
    return json.dumps(result)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        code, result = args.func(args)
    except _UsageError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except (GraphInputError, PreconditionError, CapacityError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    if args.command == "generate":
        if args.dot:
            coords = [tuple(c) for c in result["coords"]] if "coords" in result else None
            text = to_dot(_graph_of(result), coords, result.get("labels"))
        else:
            text = json.dumps(result)
        if args.output:
            Path(args.output).write_text(text + "\n")
        else:
            print(text)
        return code
    print(json.dumps(result) if args.json else _summary(args.command, result))
    return code


def _graph_of(obj: dict):
    from .io import graph_from_json
    return graph_from_json(obj).graph


if __name__ == "__main__":
    sys.exit(main())
