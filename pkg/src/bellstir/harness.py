"""Named verification suites binding each construction to the brute-force oracle.

Every suite expands into a deterministic list of instances.  Each instance is a
plain ``(check name, arguments)`` pair so it can run in a worker process; the
reports come back in instance order whatever the pool size.
"""

from __future__ import annotations

import itertools
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

from . import graphs as gr
from .colour_graphs import (
    build,
    degree_of,
    join_product_bijection,
    stirling_top_bijection,
    unique_colouring_bijection,
)
from .constructions import (
    CertificateError,
    ConstructionError,
    bell_n_cycle,
    hypercube_path,
    rook_plus_path,
    s3_path_with_endpoints,
    singleton_arc_is_contiguous,
    sk_tree_cycle,
    star_s3_cycle,
)
from .constructions.cube import weight
from .constructions.trees import STORED_PATHS, readings
from .oracle import ABSENT, FOUND, INCONCLUSIVE, check_sequence, find_hamilton_cycle, parity_gap
from .partitions import BELL, STIRLING, canonical, stirling_number_of

PASS, FAIL = "pass", "fail"


@dataclass
class Limits:
    """Size bounds for a suite run; ``None`` means the suite default."""

    max_n: int | None = None
    oracle_max_n: int | None = None
    oracle_max_vertices: int = 2000
    budget: int | None = None
    workers: int = 1


@dataclass
class VerificationReport:
    suite: str
    instance: dict
    status: str
    evidence: object = None
    seconds: float = 0.0
    notes: list = field(default_factory=list)

    def as_dict(self) -> dict:
        return asdict(self)


class _Inconclusive(Exception):
    pass


def _g(edges, n):
    return gr.Graph.from_edges(n, edges)


def _oracle_cycle(g, budget, expect_found=True):
    res = find_hamilton_cycle(g, budget)
    if res.status == INCONCLUSIVE:
        raise _Inconclusive(f"oracle budget exhausted after {res.expansions} expansions")
    if res.found != expect_found:
        return f"oracle disagrees: {res.status} ({res.reason})"
    return None


# ------------------------------------------------------------------ checks
# each returns (status, evidence, notes)


def check_bell_n(n, edges, oracle, budget):
    g = _g(edges, n)
    cert = bell_n_cycle(g)
    if oracle:
        why = _oracle_cycle(cert.colour_graph.skeleton, budget)
        if why:
            return FAIL, why, []
    return PASS, {"length": len(cert)}, cert.diagnostics


def check_kn_exclusion(n):
    sizes = {"K_n": len(build(gr.complete(n), n, BELL))}
    if n >= 2:
        sizes["K_n-e"] = len(build(gr.complete_minus_edge(n), n, BELL))
    ok = sizes["K_n"] == 1 and sizes.get("K_n-e", 2) == 2
    return (PASS if ok else FAIL), sizes, []


def check_gt(t, l):
    g = gr.g_t(t)
    cg = build(g, t + l, BELL)
    if l == t:
        cert = bell_n_cycle(g)
        return PASS, {"cycle": len(cert)}, []
    parts = gr.bipartition(cg.skeleton)
    if parts is None:
        return FAIL, "colour graph is not bipartite", []
    a, b = parts
    # A holds the colourings that separate an even number of the pairs {2i, 2i+1}
    even = {i for i, p in enumerate(cg.members) if (2 * t - len(p)) % 2 == t % 2}
    if set(a) != even:
        a, b = b, a
    gap = len(a) - len(b)
    want = parity_gap(t, l)
    ok = gap == want and abs(want) == math.comb(t - 1, l) and want != 0
    return (PASS if ok else FAIL), {"|A|-|B|": gap, "parity_gap": want}, []


def check_star(n, oracle, budget):
    if n % 2 == 1:
        cert = star_s3_cycle(n)
        ok = len(cert) == 2 ** (n - 1) - 1
        return (PASS if ok else FAIL), {"cycle": len(cert)}, []
    cg = build(gr.star(n), 3, STIRLING)
    parts = gr.bipartition(cg.skeleton)
    ok = parts is not None and len(cg) == 2 ** (n - 1) - 1 and len(cg) % 2 == 1
    if not ok:
        return FAIL, "expected a bipartite colour graph of odd order", []
    if oracle:
        why = _oracle_cycle(cg.skeleton, budget, expect_found=False)
        if why:
            return FAIL, why, []
    return PASS, {"order": len(cg), "parts": [len(p) for p in parts]}, []


def check_s3_endpoints(n, edges, x):
    g = _g(edges, n)
    a, b, cert = s3_path_with_endpoints(g, x)
    two = gr.bipartition(g)
    sides = frozenset(two[0]), frozenset(two[1])
    ps = cert.partitions()
    if not (a != b and x not in (a, b)):
        return FAIL, {"a": a, "b": b, "x": x}, []
    if a not in readings(ps[0], *sides) or b not in readings(ps[-1], *sides):
        return FAIL, {"ends": (ps[0], ps[-1]), "a": a, "b": b}, []
    return PASS, {"a": a, "b": b, "length": len(cert)}, []


def check_sk(n, edges, k, oracle_max_vertices, budget):
    g = _g(edges, n)
    cert = sk_tree_cycle(g, k)
    sub = [v for v in range(n) if v != cert.leaf]
    small, _ = g.induced(sub)
    expected = stirling_number_of(small, k - 1)
    if sum(cert.singleton) != expected or not singleton_arc_is_contiguous(cert.singleton):
        return FAIL, {"singleton arc": sum(cert.singleton), "expected": expected}, []
    notes = list(cert.diagnostics)
    if len(cert) <= oracle_max_vertices:
        why = _oracle_cycle(cert.colour_graph.skeleton, budget)
        if why:
            return FAIL, why, notes
    else:
        notes.append("oracle skipped: above vertex bound")
    return PASS, {"length": len(cert), "leaf": cert.leaf}, notes


def check_top_stirling(n, edges):
    g = _g(edges, n)
    bij, sg, lg, _ = stirling_top_bijection(g)
    if not bij:
        return FAIL, bij.failures[:3], []
    conn_s = gr.is_connected(sg.skeleton)
    comp = gr.complement(g)
    conn_edges = edges_connected(comp)
    notes = []
    if conn_s != gr.is_connected(comp):
        notes.append("complement connectivity differs only through isolated vertices")
    if conn_s != conn_edges:
        return FAIL, {"S connected": conn_s, "complement edges connected": conn_edges}, notes
    return PASS, {"order": len(sg), "connected": conn_s}, notes


def edges_connected(g) -> bool:
    """True when the non-isolated vertices of ``g`` induce a connected graph."""
    active = [v for v in range(g.n) if g.adj[v]]
    return gr.is_connected(g.induced(active)[0]) if active else True


REFERENCE_S3_P4 = {
    "vertices": ["0|1,3|2", "0,3|1|2", "0,2|1|3"],
    "edges": [("0|1,3|2", "0,3|1|2"), ("0,3|1|2", "0,2|1|3")],
}

# S_3(P_5) with path labels a..e as 0..4: nine edges
REFERENCE_S3_P5 = {
    "vertices": ["0,3|1,4|2", "0,3|1|2,4", "0,2,4|1|3", "0,2|1,4|3", "0|1,3|2,4", "0,4|1,3|2", "0,2|1,3|4"],
    "edges": [
        ("0,3|1,4|2", "0,3|1|2,4"),
        ("0,3|1|2,4", "0,2,4|1|3"),
        ("0|1,3|2,4", "0,2|1,3|4"),
        ("0,3|1,4|2", "0,2|1,4|3"),
        ("0|1,3|2,4", "0,4|1,3|2"),
        ("0,4|1,3|2", "0,2|1,3|4"),
        ("0,2|1,3|4", "0,2|1,4|3"),
        ("0|1,3|2,4", "0,3|1|2,4"),
        ("0,2,4|1|3", "0,2|1,4|3"),
    ],
}


def _parse(text):
    return canonical([int(v) for v in c.split(",")] for c in text.split("|"))


def check_reference_graph(name):
    fig, g = {"P4": (REFERENCE_S3_P4, gr.path(4)), "P5": (REFERENCE_S3_P5, gr.path(5))}[name]
    cg = build(g, 3, STIRLING)
    verts = {_parse(v) for v in fig["vertices"]}
    edges = {frozenset((_parse(u), _parse(v))) for u, v in fig["edges"]}
    got_v = set(cg.members)
    got_e = {frozenset((cg.members[u], cg.members[v])) for u, v in cg.skeleton.edges()}
    if got_v != verts or got_e != edges:
        return FAIL, {"extra vertices": sorted(got_v - verts), "missing vertices": sorted(verts - got_v),
                      "extra edges": len(got_e - edges), "missing edges": len(edges - got_e)}, []
    return PASS, {"vertices": len(got_v), "edges": len(got_e)}, []


def check_stored_paths():
    bad = []
    for name, (edges, paths) in STORED_PATHS.items():
        g = _g(edges, len(edges) + 1)
        cg = build(g, 3, STIRLING)
        for seq in paths:
            if any(p not in cg.index for p in seq):
                bad.append((name, "not a vertex"))
                continue
            ids = [cg.index[p] for p in seq]
            witness = check_sequence(cg.skeleton, ids, closed=False)
            if witness is not None:
                bad.append((name, witness))
    return (FAIL, bad, []) if bad else (PASS, {"stored": sum(len(p) for _, p in STORED_PATHS.values())}, [])


def check_unique(h_edges, h_n, g_edges, g_n, k):
    bij, ck, bk = unique_colouring_bijection(_g(h_edges, h_n), _g(g_edges, g_n), k)
    if not bij:
        return FAIL, bij.failures[:3], []
    return PASS, {"order": len(ck), "edges": ck.skeleton.m}, []


def check_join(g_edges, g_n, h_edges, h_n):
    bij, joined, prod = join_product_bijection(_g(g_edges, g_n), _g(h_edges, h_n))
    if not bij:
        return FAIL, bij.failures[:3], []
    return PASS, {"order": len(joined), "edges": joined.skeleton.m}, []


def check_connectivity(n, edges):
    g = _g(edges, n)
    k = gr.colouring_number(g) + 1
    ok = gr.is_connected(build(g, k, BELL).skeleton)
    return (PASS if ok else FAIL), {"k": k}, []


def check_lnn(n):
    g = gr.l_nn(n)
    cg = build(g, n, BELL)
    matched = canonical([i, n + i] for i in range(n))
    deg = degree_of(cg, matched)
    return (PASS if deg == 0 else FAIL), {"degree": deg, "order": len(cg)}, []


def check_rook(r, s, oracle, budget):
    g, clone, _ = gr.rook_plus(r, s)
    bad = []
    for target in range(r * s):
        path = rook_plus_path(r, s, target)
        w = check_sequence(g, path, closed=False)
        if w is not None or path[0] != clone or path[-1] != target:
            bad.append((target, w))
    if bad:
        return FAIL, bad[:3], []
    return PASS, {"targets": r * s}, []


def check_cube(m, oracle, budget):
    from .oracle import find_hamilton_path

    q = gr.hypercube(m)
    verts = list(itertools.product((0, 1), repeat=m))
    checked = 0
    for x, y in itertools.combinations(verts, 2):
        if weight(x) % 2 == weight(y) % 2:
            try:
                hypercube_path(x, y)
            except ValueError:
                continue
            return FAIL, {"accepted same parity": (x, y)}, []
        path = [gr.value_of(b) for b in hypercube_path(x, y)]
        w = check_sequence(q, path, closed=False)
        if w is not None or path[0] != gr.value_of(x) or path[-1] != gr.value_of(y):
            return FAIL, {"pair": (x, y), "witness": w}, []
        checked += 1
    if oracle and m >= 2:
        # parity pairs the oracle must reject; opposite pairs it must accept
        x, same, opp = 0, 3, 1
        if find_hamilton_path(q, x, same, budget).status != ABSENT:
            return FAIL, "oracle found a same-parity path", []
        if find_hamilton_path(q, x, opp, budget).status != FOUND:
            return FAIL, "oracle found no opposite-parity path", []
    return PASS, {"pairs": checked}, []


CHECKS = {f.__name__: f for f in [
    check_bell_n, check_kn_exclusion, check_gt, check_star, check_s3_endpoints, check_sk, check_top_stirling,
    check_reference_graph, check_stored_paths, check_unique, check_join, check_connectivity, check_lnn,
    check_rook, check_cube,
]}

# ------------------------------------------------------------------ suites


def _bell_instances(lim):
    max_n = lim.max_n or 5
    oracle_n = 5 if lim.oracle_max_n is None else lim.oracle_max_n
    for n in range(2, max_n + 1):
        for g in gr.nonisomorphic_graphs(n):
            if g.m >= n * (n - 1) // 2 - 1:
                continue
            yield {"n": n, "edges": g.edges()}, "check_bell_n", (n, g.edges(), n <= oracle_n, lim.budget)


def _kn_instances(lim):
    for n in range(1, (lim.max_n or 6) + 1):
        yield {"n": n}, "check_kn_exclusion", (n,)


def _gt_instances(lim):
    for t in range(1, (lim.max_n or 5) + 1):
        for l in range(t + 1):
            if t == 1 and l == 1:
                continue  # G_1 is K_2 - e, whose B_2 has only two vertices
            yield {"t": t, "l": l}, "check_gt", (t, l)


def _star_instances(lim):
    oracle_n = 6 if lim.oracle_max_n is None else lim.oracle_max_n
    for n in range(3, (lim.max_n or 8) + 1):
        yield {"n": n}, "check_star", (n, n <= oracle_n, lim.budget)


def _tree_list(lo, hi):
    for n in range(lo, hi + 1):
        for t in gr.nonisomorphic_trees(n):
            yield n, t


def _s3_endpoint_instances(lim):
    for n, t in _tree_list(4, lim.max_n or 9):
        for x in range(n):
            yield {"n": n, "edges": t.edges(), "x": x}, "check_s3_endpoints", (n, t.edges(), x)


def _sk_instances(lim):
    for n, t in _tree_list(5, lim.max_n or 9):
        for k in range(4, min(n - 1, 8) + 1):
            yield {"n": n, "edges": t.edges(), "k": k}, "check_sk", (n, t.edges(), k, lim.oracle_max_vertices, lim.budget)


def _top_stirling_instances(lim):
    for n in range(2, (lim.max_n or 6) + 1):
        for g in gr.nonisomorphic_graphs(n):
            if g.m < n * (n - 1) // 2:
                yield {"n": n, "edges": g.edges()}, "check_top_stirling", (n, g.edges())


def _reference_instances(lim):
    yield {"figure": "P4"}, "check_reference_graph", ("P4",)
    yield {"figure": "P5"}, "check_reference_graph", ("P5",)
    yield {"figure": "stored paths"}, "check_stored_paths", ()


def _bijection_instances(lim):
    k2, k3, p3 = gr.complete(2), gr.complete(3), gr.path(3)
    yield {"h": "K_2", "g": "K_1", "k": 2}, "check_unique", (k2.edges(), 2, [], 1, 2)
    yield {"h": "K_3", "g": "P_3", "k": 3}, "check_unique", (k3.edges(), 3, p3.edges(), 3, 3)
    small = [g for n in range(1, 4) for g in gr.nonisomorphic_graphs(n)]
    for g, h in itertools.product(small, repeat=2):
        yield {"g": (g.n, g.edges()), "h": (h.n, h.edges())}, "check_join", (g.edges(), g.n, h.edges(), h.n)


def _connectivity_instances(lim):
    for n in range(1, (lim.max_n or 6) + 1):
        for g in gr.nonisomorphic_graphs(n):
            yield {"n": n, "edges": g.edges()}, "check_connectivity", (n, g.edges())
    for n in (3, 4, 5):
        yield {"L_nn": n}, "check_lnn", (n,)


def _rook_cube_instances(lim):
    for r, s in itertools.product(range(1, 5), repeat=2):
        yield {"rook_plus": (r, s)}, "check_rook", (r, s, True, lim.budget)
    for m in range(1, 6):
        yield {"hypercube": m}, "check_cube", (m, True, lim.budget)


SUITES = {
    "bell-n-exhaustive": _bell_instances,
    "kn-exclusion": _kn_instances,
    "gt-parity": _gt_instances,
    "star-parity": _star_instances,
    "lemma45-sweep": _s3_endpoint_instances,
    "sk-tree-sweep": _sk_instances,
    "lemma41-iso": _top_stirling_instances,
    "figures": _reference_instances,
    "bijections": _bijection_instances,
    "connectivity": _connectivity_instances,
    "rook-hypercube": _rook_cube_instances,
}


def _run_one(job):
    suite, desc, check, args = job
    t0 = time.perf_counter()
    try:
        status, evidence, notes = CHECKS[check](*args)
    except _Inconclusive as exc:
        status, evidence, notes = INCONCLUSIVE, str(exc), []
    except (CertificateError, ConstructionError, ValueError) as exc:
        ctx = getattr(exc, "context", None) or getattr(exc, "witness", None)
        status, evidence, notes = FAIL, {"error": type(exc).__name__, "message": str(exc), "context": ctx}, []
    return VerificationReport(suite, desc, status, evidence, time.perf_counter() - t0, notes)


def instances(name: str, limits: Limits | None = None) -> list:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; known: {', '.join(SUITES)}")
    lim = limits or Limits()
    return [(name, desc, check, args) for desc, check, args in SUITES[name](lim)]


def run_suite(name: str, limits: Limits | None = None) -> list[VerificationReport]:
    """Run every instance of suite ``name`` and return reports in instance order."""
    lim = limits or Limits()
    jobs = instances(name, lim)
    if lim.workers <= 1:
        return [_run_one(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=lim.workers) as pool:
        return list(pool.map(_run_one, jobs, chunksize=4))


def aggregate(reports) -> str:
    """FAIL beats INCONCLUSIVE beats PASS."""
    statuses = {r.status for r in reports}
    if FAIL in statuses:
        return FAIL
    if INCONCLUSIVE in statuses:
        return INCONCLUSIVE
    return PASS
