"""Command line entry point: ``bellstir <verb> ...``.

Exit codes: 0 success, 1 failure (construction or verification), 2 inconclusive
(oracle budget exhausted), 3 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import graphs as gr
from .colour_graphs import build
from .constructions import (
    CYCLE,
    PATH,
    CertificateError,
    ConstructionError,
    b3_tree_cycle,
    bell_n_cycle,
    certify,
    s3_path_with_endpoints,
    s3_tree_ham_path,
    sk_tree_cycle,
    star_s3_cycle,
    stirling_base_cycle,
)
from .export import FORMATS, export, load_graph
from .harness import FAIL, INCONCLUSIVE, SUITES, Limits, aggregate, run_suite
from .oracle import find_hamilton_cycle, find_hamilton_path
from .partitions import BELL, LABELED, STIRLING, EnumerationCapExceeded, canonical, enumerate_family, format_partition

EXIT_OK, EXIT_FAIL, EXIT_INCONCLUSIVE, EXIT_USAGE = 0, 1, 2, 3

CONSTRUCTIONS = ("auto", "bell-n", "s3-star", "b3-tree", "s3-path", "s4-tree", "sk-tree", "base")
KIND_NAMES = {"bell": BELL, "stirling": STIRLING, "kcolour": LABELED}

FAMILIES = {
    "path": gr.path,
    "cycle": gr.cycle,
    "star": gr.star,
    "complete": gr.complete,
    "empty": gr.empty,
    "kn-e": gr.complete_minus_edge,
    "lnn": gr.l_nn,
    "gt": gr.g_t,
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_family(spec: str) -> gr.Graph:
    """``name:arg`` shorthand, e.g. ``path:5``, ``star:4``, ``pruefer:0,0,1``."""
    name, _, arg = spec.partition(":")
    if name == "pruefer":
        seq = [int(v) for v in arg.split(",")] if arg else []
        return gr.tree_from_pruefer(seq, len(seq) + 2)
    if name not in FAMILIES:
        raise UsageError(f"unknown family {name!r}; known: {', '.join(sorted(FAMILIES))}, pruefer")
    try:
        return FAMILIES[name](int(arg))
    except ValueError as exc:
        raise UsageError(f"bad family argument in {spec!r}: {exc}") from exc


def read_graph(args) -> gr.Graph:
    if bool(args.graph) == bool(args.family):
        raise UsageError("give exactly one of --graph FILE and --family NAME:ARG")
    if args.family:
        return parse_family(args.family)
    text = sys.stdin.read() if args.graph == "-" else open(args.graph).read()
    return load_graph(text)


def _emit(data: bytes, out):
    out.write(data.decode())


def _star_centre(g: gr.Graph) -> int | None:
    if g.n < 4 or g.m != g.n - 1:
        return None
    centres = [v for v in range(g.n) if g.degree(v) == g.n - 1]
    return centres[0] if centres else None


def _star_s3(g: gr.Graph):
    centre = _star_centre(g)
    if centre is None:
        raise UsageError("s3-star needs a star K_{1,n} with n >= 3")
    cert = star_s3_cycle(g.n - 1)
    # the construction puts the centre at 0; move it to this graph's ids
    relabel = [centre] + [v for v in range(g.n) if v != centre]
    items = [canonical([[relabel[v] for v in c] for c in p]) for p in cert.partitions()]
    return certify(build(g, 3, STIRLING), items, CYCLE)


def choose_construction(g: gr.Graph, kind: str, k: int) -> str:
    """The dispatch behind ``--construction auto``."""
    if gr.is_tree(g) and kind == STIRLING:
        if k == 3:
            centre = _star_centre(g)
            return "s3-star" if centre is not None and (g.n - 1) % 2 == 1 else "s3-path"
        if k >= 4 and g.n >= k + 1:
            return "sk-tree"
    if gr.is_tree(g) and kind == BELL and k == 3 and g.n >= 4:
        return "b3-tree"
    if kind == BELL and k >= g.n:
        return "bell-n"
    return "oracle"


def run_construction(g: gr.Graph, name: str, kind: str, k: int, x=None, leaf=None, budget=None):
    if name == "auto":
        name = choose_construction(g, kind, k)
    if name == "bell-n":
        return bell_n_cycle(g)
    if name == "s3-star":
        return _star_s3(g)
    if name == "b3-tree":
        return b3_tree_cycle(g)
    if name == "s3-path":
        if x is not None:
            return s3_path_with_endpoints(g, x)[2]
        return s3_tree_ham_path(g)
    if name == "s4-tree":
        return sk_tree_cycle(g, 4, leaf)
    if name == "sk-tree":
        return sk_tree_cycle(g, k, leaf)
    if name == "base":
        return stirling_base_cycle(g)
    if name == "oracle":
        return oracle_cycle(g, kind, k, budget)
    raise UsageError(f"unknown construction {name!r}")


class Inconclusive(Exception):
    pass


class Absent(Exception):
    pass


def oracle_cycle(g, kind, k, budget=None, ends=None):
    cg = build(g, k, kind)
    if ends is None:
        res = find_hamilton_cycle(cg.skeleton, budget)
    else:
        u, v = (cg.index[canonical_item(e, kind)] for e in ends)
        res = find_hamilton_path(cg.skeleton, u, v, budget)
    if res.status == INCONCLUSIVE:
        raise Inconclusive(f"oracle budget exhausted after {res.expansions} expansions")
    if not res.found:
        raise Absent(res.reason or "no Hamilton cycle")
    items = [cg.members[i] for i in res.sequence]
    return certify(cg, items, CYCLE if ends is None else PATH)


def canonical_item(text: str, kind: str):
    if kind == LABELED:
        return tuple(int(v) for v in text.split(","))
    return canonical([int(v) for v in c.split(",")] for c in text.split("|"))


# ------------------------------------------------------------------ verbs


def cmd_enumerate(args, out) -> int:
    g = read_graph(args)
    fam = enumerate_family(g, args.k, KIND_NAMES[args.kind], args.cap)
    if args.format == "json":
        texts = [",".join(map(str, m)) if fam.mode == LABELED else format_partition(m) for m in fam]
        out.write(json.dumps({"k": args.k, "mode": fam.mode, "count": len(fam), "members": texts}, indent=2) + "\n")
    else:
        for m in fam:
            out.write((",".join(map(str, m)) if fam.mode == LABELED else format_partition(m)) + "\n")
    return EXIT_OK


def cmd_build(args, out) -> int:
    g = read_graph(args)
    cg = build(g, args.k, KIND_NAMES[args.kind], args.cap)
    fmt = "json" if args.format == "graycode-text" else args.format
    _emit(export(cg, fmt), out)
    return EXIT_OK


def cmd_graycode(args, out) -> int:
    g = read_graph(args)
    k = g.n if args.k is None else args.k
    cert = run_construction(g, args.construction, KIND_NAMES[args.kind], k, args.x, args.leaf, args.budget)
    _emit(export(cert, args.format), out)
    return EXIT_OK


def cmd_oracle(args, out) -> int:
    g = read_graph(args)
    k = g.n if args.k is None else args.k
    cert = oracle_cycle(g, KIND_NAMES[args.kind], k, args.budget, args.path)
    _emit(export(cert, args.format), out)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    lim = Limits(max_n=args.max_n, budget=args.budget, workers=args.workers)
    reports = run_suite(args.suite, lim)
    for r in reports:
        if args.format == "json":
            out.write(json.dumps(r.as_dict(), default=str, sort_keys=True) + "\n")
        else:
            out.write(f"{r.status:12s} {json.dumps(r.instance, default=str)}  {r.seconds:.3f}s\n")
    status = aggregate(reports)
    counts = {s: sum(r.status == s for r in reports) for s in ("pass", FAIL, INCONCLUSIVE)}
    print(f"{args.suite}: {status} {counts}", file=sys.stderr)
    return {FAIL: EXIT_FAIL, INCONCLUSIVE: EXIT_INCONCLUSIVE}.get(status, EXIT_OK)


def make_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="bellstir", description="Bell and Stirling colour graphs and their Gray codes")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def graph_opts(sp, default_format="graycode-text"):
        sp.add_argument("--graph", help="graph JSON file ({n, edges, labels?}); '-' reads stdin")
        sp.add_argument("--family", help="shorthand such as path:5, star:4, gt:3, pruefer:0,0,1")
        sp.add_argument("--format", choices=FORMATS, default=default_format)
        sp.add_argument("--kind", choices=sorted(KIND_NAMES), default="bell")
        sp.add_argument("--budget", type=int, default=None, help="oracle node budget")

    e = sub.add_parser("enumerate", help="list the partitions or colourings")
    graph_opts(e)
    e.add_argument("--k", type=int, required=True)
    e.add_argument("--cap", type=int, default=10**7)
    e.set_defaults(func=cmd_enumerate)

    b = sub.add_parser("build", help="materialise a colour graph (json or dot)")
    graph_opts(b, "json")
    b.add_argument("--k", type=int, required=True)
    b.add_argument("--cap", type=int, default=10**7)
    b.set_defaults(func=cmd_build)

    g = sub.add_parser("graycode", help="construct a Hamilton cycle or path")
    graph_opts(g)
    g.add_argument("--k", type=int, default=None, help="colour bound (default n)")
    g.add_argument("--construction", choices=CONSTRUCTIONS, default="auto")
    g.add_argument("--x", type=int, default=None, help="vertex the S_3 path ends must avoid")
    g.add_argument("--leaf", type=int, default=None, help="leaf removed at the top level (sk-tree)")
    g.set_defaults(func=cmd_graycode)

    o = sub.add_parser("oracle", help="brute-force Hamilton cycle or path search")
    graph_opts(o)
    o.add_argument("--k", type=int, default=None)
    o.add_argument("--path", nargs=2, metavar=("FROM", "TO"), help="partitions such as 0,2|1|3")
    o.set_defaults(func=cmd_oracle)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", choices=sorted(SUITES), required=True)
    v.add_argument("--max-n", type=int, default=None)
    v.add_argument("--workers", type=int, default=1)
    v.add_argument("--budget", type=int, default=None)
    v.add_argument("--format", choices=("text", "json"), default="text")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except (UsageError, gr.GraphError, json.JSONDecodeError, OSError) as exc:
        print(f"bellstir: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Inconclusive as exc:
        print(f"bellstir: inconclusive: {exc}", file=sys.stderr)
        return EXIT_INCONCLUSIVE
    except (Absent, ConstructionError, CertificateError, EnumerationCapExceeded, ValueError, KeyError) as exc:
        print(f"bellstir: failed: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
