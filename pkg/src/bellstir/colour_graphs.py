"""Materialised Bell, Stirling and k-colour graphs, plus the explicit bijections
relating them to line graphs, k-colour graphs and Cartesian products."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from . import graphs as gr
from .graphs import Graph
from .partitions import (
    BELL,
    DEFAULT_CAP,
    LABELED,
    STIRLING,
    PartitionFamily,
    canonical,
    cell_map,
    enumerate_family,
    quick_adjacent,
    restrict,
)

KINDS = {"bell": BELL, "stirling": STIRLING, "kcolour": LABELED, LABELED: LABELED}

BUCKET_THRESHOLD = 32


@dataclass(frozen=True)
class ColourGraph:
    base: Graph
    k: int
    kind: str
    family: PartitionFamily
    skeleton: Graph
    index: dict = field(compare=False, repr=False)

    @property
    def members(self):
        return self.family.members

    def __len__(self):
        return len(self.family)

    def vertex(self, item) -> int:
        return self.index[item]


def _edges_all_pairs(members, is_labeled):
    edges = []
    for i, j in itertools.combinations(range(len(members)), 2):
        p, q = members[i], members[j]
        if is_labeled:
            ok = sum(a != b for a, b in zip(p, q)) == 1
        else:
            ok = quick_adjacent(p, q)
        if ok:
            edges.append((i, j))
    return edges


def _edges_bucketed(members, n, is_labeled):
    """Group members by their restriction to ``V - x``; each bucket is a clique."""
    buckets: dict = {}
    for i, p in enumerate(members):
        for x in range(n):
            if is_labeled:
                key = (x, p[:x] + (0,) + p[x + 1 :])
            else:
                key = (x, restrict(p, x))
            buckets.setdefault(key, []).append(i)
    edges = set()
    for ids in buckets.values():
        edges.update(itertools.combinations(ids, 2))
    return sorted(edges)


def build(g: Graph, k: int, kind: str = BELL, cap: int = DEFAULT_CAP, strategy: str = "auto") -> ColourGraph:
    mode = KINDS.get(kind, kind)
    fam = enumerate_family(g, k, mode, cap)
    members = fam.members
    labeled = mode == LABELED
    if strategy == "auto":
        strategy = "bucket" if len(members) > BUCKET_THRESHOLD else "pairs"
    if strategy == "pairs":
        edges = _edges_all_pairs(members, labeled)
    elif strategy == "bucket":
        edges = _edges_bucketed(members, g.n, labeled)
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    skeleton = Graph.from_edges(len(members), edges)
    return ColourGraph(g, k, mode, fam, skeleton, {p: i for i, p in enumerate(members)})


def bell_graph(g: Graph, k: int | None = None, **kw) -> ColourGraph:
    return build(g, g.n if k is None else k, BELL, **kw)


def stirling_graph(g: Graph, k: int, **kw) -> ColourGraph:
    return build(g, k, STIRLING, **kw)


@dataclass
class Bijection:
    """An explicit map between two vertex sets and whether it preserved edges."""

    mapping: dict
    is_isomorphism: bool
    failures: list = field(default_factory=list)

    def __bool__(self):
        return self.is_isomorphism


def _check_isomorphism(src: Graph, dst: Graph, phi: dict[int, int], limit=10) -> list:
    failures = []
    if len(phi) != src.n or sorted(phi.values()) != list(range(dst.n)):
        failures.append(("not a bijection", len(phi), src.n, dst.n))
        return failures
    for u in range(src.n):
        for v in range(u + 1, src.n):
            if src.has_edge(u, v) != dst.has_edge(phi[u], phi[v]):
                failures.append(("edge mismatch", u, v))
                if len(failures) >= limit:
                    return failures
    return failures


def stirling_top_bijection(g: Graph) -> tuple[Bijection, ColourGraph, Graph, list]:
    """``S_{n-1}(g)`` against the line graph of the complement.

    Each ``(n-1)``-cell partition maps to the unique pair sharing a cell.  Returns
    the bijection (partition -> complement edge), the Stirling graph, the line
    graph and its edge index.
    """
    if g.n < 2 or g.m == g.n * (g.n - 1) // 2:
        raise ValueError("stirling_top_bijection needs a non-complete graph on >= 2 vertices")
    sg = stirling_graph(g, g.n - 1)
    lg, edge_index = gr.line_graph(gr.complement(g))
    pos = {e: i for i, e in enumerate(edge_index)}
    mapping = {}
    phi = {}
    for i, p in enumerate(sg.members):
        (pair,) = [c for c in p if len(c) == 2]
        mapping[p] = pair
        phi[i] = pos[pair]
    failures = _check_isomorphism(sg.skeleton, lg, phi)
    return Bijection(mapping, not failures, failures), sg, lg, edge_index


def partition_of_pair(n: int, pair: tuple[int, int]) -> tuple:
    u, v = pair
    return canonical([[u, v]] + [[w] for w in range(n) if w not in pair])


def unique_colouring_bijection(h: Graph, g: Graph, k: int) -> tuple[Bijection, ColourGraph, ColourGraph]:
    """``C_k(g)`` onto ``B_k(h + g)`` for uniquely k-colourable ``h`` (``h`` ids first)."""
    fam = enumerate_family(h, k, BELL)
    if len(fam) != 1 or len(fam[0]) != k:
        raise ValueError("h is not uniquely k-colourable")
    xs = fam[0]
    union = gr.disjoint_union(h, g)
    ck = build(g, k, LABELED)
    bk = build(union, k, BELL)
    mapping = {}
    phi = {}
    for i, c in enumerate(ck.members):
        cells = [list(xs[j]) + [h.n + v for v in range(g.n) if c[v] == j + 1] for j in range(k)]
        p = canonical(cells)
        mapping[c] = p
        if p not in bk.index:
            return Bijection(mapping, False, [("image not a vertex", c, p)]), ck, bk
        phi[i] = bk.index[p]
    failures = _check_isomorphism(ck.skeleton, bk.skeleton, phi)
    return Bijection(mapping, not failures, failures), ck, bk


def join_product_bijection(g: Graph, h: Graph) -> tuple[Bijection, ColourGraph, Graph]:
    """``B_k(g) [] B_k(h)`` onto ``B_k(g v h)`` with ``k = |V(g)| + |V(h)|``."""
    k = g.n + h.n
    bg, bh = build(g, k, BELL), build(h, k, BELL)
    joined = build(gr.join(g, h), k, BELL)
    prod = gr.cartesian_product(bg.skeleton, bh.skeleton)
    mapping = {}
    phi = {}
    for a, p1 in enumerate(bg.members):
        for b, p2 in enumerate(bh.members):
            p = canonical(list(p1) + [[g.n + v for v in c] for c in p2])
            mapping[(p1, p2)] = p
            if p not in joined.index:
                return Bijection(mapping, False, [("image not a vertex", p1, p2)]), joined, prod
            phi[a * len(bh) + b] = joined.index[p]
    failures = _check_isomorphism(prod, joined.skeleton, phi)
    return Bijection(mapping, not failures, failures), joined, prod


def all_singletons(verts) -> tuple:
    return tuple((v,) for v in sorted(verts))


def degree_of(cg: ColourGraph, item) -> int:
    return cg.skeleton.degree(cg.index[item])


__all__ = [
    "ColourGraph",
    "Bijection",
    "build",
    "bell_graph",
    "stirling_graph",
    "stirling_top_bijection",
    "unique_colouring_bijection",
    "join_product_bijection",
    "partition_of_pair",
    "all_singletons",
    "degree_of",
    "cell_map",
]
