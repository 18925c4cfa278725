"""``S_{n-1}(G)`` through the line graph of the complement.

An ``(n-1)``-cell partition is determined by its one 2-cell, a non-edge of ``G``;
a Hamilton cycle of ``L(H)`` comes from a circuit of ``H`` touching every edge.
"""

from __future__ import annotations

import itertools

from ..colour_graphs import build
from ..graphs import Graph, complement
from ..oracle import find_hamilton_cycle
from ..partitions import STIRLING
from .decorated import CYCLE, ConstructionError, certify


def _cycle_on(h: Graph, verts) -> list[int] | None:
    verts = sorted(verts)
    if len(verts) < 3:
        return None
    sub, order = h.induced(verts)
    res = find_hamilton_cycle(sub)
    return [order[i] for i in res.sequence] if res.found else None


def dominating_circuit(h: Graph) -> list[int] | None:
    """A cycle of ``h`` containing an endpoint of every edge, or None.

    Tries the non-isolated vertices first, then smaller vertex covers.
    """
    active = [v for v in range(h.n) if h.adj[v]]
    cyc = _cycle_on(h, active)
    if cyc is not None:
        return cyc
    edges = h.edges()
    for size in range(len(active) - 1, 2, -1):
        for sub in itertools.combinations(active, size):
            s = set(sub)
            if all(u in s or v in s for u, v in edges):
                cyc = _cycle_on(h, sub)
                if cyc is not None:
                    return cyc
    return None


def line_graph_cycle(h: Graph) -> list[tuple[int, int]]:
    """Hamilton cycle of ``L(h)`` as a cyclic list of edges of ``h``."""
    edges = h.edges()
    if len(edges) < 3:
        raise ConstructionError("line graph has fewer than 3 vertices", edges=len(edges))
    centres = set(edges[0]).intersection(*map(set, edges))
    if centres:
        # a star: its line graph is complete
        return edges
    circ = dominating_circuit(h)
    if circ is None:
        raise ConstructionError("no dominating circuit found")
    c = len(circ)
    on = {v: i for i, v in enumerate(circ)}
    ring = {tuple(sorted((circ[i], circ[(i + 1) % c]))) for i in range(c)}
    pendants: dict[int, list] = {i: [] for i in range(c)}
    for e in edges:
        if e in ring:
            continue
        anchor = min(v for v in e if v in on)
        pendants[on[anchor]].append(e)
    out = []
    for i in range(c):
        out += pendants[i]
        out.append(tuple(sorted((circ[i], circ[(i + 1) % c]))))
    return out


def stirling_base_items(g: Graph, verts=None) -> list:
    """``S_{|verts|-1}`` Hamilton cycle of ``g[verts]`` as partitions of ``verts``."""
    verts = sorted(range(g.n) if verts is None else verts)
    sub, order = g.induced(verts)
    cyc = line_graph_cycle(complement(sub))
    out = []
    for u, v in cyc:
        pair = (order[u], order[v])
        out.append(tuple(sorted([pair] + [(w,) for w in verts if w not in pair])))
    return out


def stirling_base_cycle(g: Graph):
    """Validated Hamilton cycle of ``S_{n-1}(g)``."""
    if g.n < 3:
        raise ValueError("need at least 3 vertices")
    return certify(build(g, g.n - 1, STIRLING), stirling_base_items(g), CYCLE)
