"""Hamilton cycles in C-graphs: Hamilton-connected blocks glued in a ring."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import networkx as nx

from ..graphs import Graph
from ..oracle import check_sequence, find_hamilton_path
from .decorated import ConstructionError


@dataclass
class CGraphDecomposition:
    blocks: list[list[int]]

    @property
    def N(self) -> int:
        return len(self.blocks)

    def boundary(self, host: Graph, j: int, banned: int | None = None) -> list[tuple[int, int]]:
        """Edges from block ``j`` to block ``j+1``, as (end in j, end in j+1)."""
        nxt = set(self.blocks[(j + 1) % self.N])
        out = []
        for u in self.blocks[j]:
            if u == banned:
                continue
            for v in sorted(host.adj[u] & nxt):
                if v != banned:
                    out.append((u, v))
        return out


def disjoint_edges(edges) -> int:
    """Size of a maximum matching among ``edges`` (a bipartite edge set)."""
    if not edges:
        return 0
    b = nx.Graph()
    left = {("L", u) for u, _ in edges}
    b.add_nodes_from(left)
    b.add_edges_from((("L", u), ("R", v)) for u, v in edges)
    return len(nx.bipartite.hopcroft_karp_matching(b, top_nodes=left)) // 2


def _is_clique(host: Graph, block) -> bool:
    return all(host.has_edge(u, v) for u, v in itertools.combinations(block, 2))


def _block_path(host: Graph, block, entry, exit_, through=None) -> list[int]:
    """Hamilton path of ``host[block]`` from entry to exit, using edge ``through`` if given."""
    if _is_clique(host, block):
        rest = [v for v in sorted(block) if v not in (entry, exit_)]
        if through is not None:
            a, b = through
            if b in (entry, exit_):
                a, b = b, a
            if b in (entry, exit_):
                raise ConstructionError("required edge joins the entry and the exit", block=sorted(block))
            if a == entry:
                rest = [b] + [v for v in rest if v != b]
            elif a == exit_:
                rest = [v for v in rest if v != b] + [b]
            else:
                rest = [a, b] + [v for v in rest if v not in (a, b)]
        return [entry] + rest + [exit_]
    sub, order = host.induced(block)
    pos = {v: i for i, v in enumerate(order)}
    if through is None:
        res = find_hamilton_path(sub, pos[entry], pos[exit_])
        if not res.found:
            raise ConstructionError("block is not Hamilton connected", block=sorted(block), entry=entry, exit=exit_)
        return [order[i] for i in res.sequence]
    # subdivide the required edge so any Hamilton path must use it
    x, y = (pos[v] for v in through)
    mid = sub.n
    adj = [set(a) for a in sub.adj] + [{x, y}]
    adj[x].discard(y)
    adj[y].discard(x)
    adj[x].add(mid)
    adj[y].add(mid)
    aug = Graph(sub.n + 1, tuple(frozenset(a) for a in adj))
    res = find_hamilton_path(aug, pos[entry], pos[exit_])
    if not res.found:
        raise ConstructionError("no Hamilton path through the required edge", block=sorted(block), edge=through)
    return [order[i] for i in res.sequence if i != mid]


def c_graph_cycle_through_edge(host: Graph, decomp: CGraphDecomposition, edge) -> list[int]:
    """Hamilton cycle of ``host`` through ``edge``, which lies inside one block."""
    x, y = edge
    if not host.has_edge(x, y):
        raise ValueError(f"{edge} is not an edge of the host")
    N = decomp.N
    where = {}
    for j, blk in enumerate(decomp.blocks):
        if len(blk) < 3:
            raise ConstructionError("block with fewer than 3 vertices", block=j)
        for v in blk:
            if v in where:
                raise ConstructionError("blocks overlap", vertex=v)
            where[v] = j
    if len(where) != host.n:
        raise ConstructionError("blocks do not cover the host", missing=sorted(set(range(host.n)) - set(where)))
    if N < 2:
        raise ConstructionError("need at least two blocks", N=N)
    i = where[x]
    if where[y] != i:
        raise ValueError("the edge must lie inside a block")
    bounds = []
    for j in range(N):
        banned = x if j in ((i - 1) % N, i) else None
        es = decomp.boundary(host, j, banned)
        size = disjoint_edges(es)
        if size < 2:
            raise ConstructionError("boundary carries fewer than 2 disjoint edges", pair=(j, (j + 1) % N), disjoint=size)
        bounds.append((es, size))
    closing = next((j for j in range(N) if bounds[j][1] >= 3), None)
    if closing is None:
        raise ConstructionError("no boundary carries 3 disjoint edges")
    # walk the ring starting right after the closing boundary
    start = (closing + 1) % N
    order = [(start + t) % N for t in range(N)]
    chosen = {}
    first_exit = None
    entry = None
    for t, j in enumerate(order):
        es = bounds[j][0]
        last = t == N - 1
        for u, v in es:
            if entry is not None and u == entry:
                continue
            if last and v == first_exit:
                continue
            break
        else:
            raise ConstructionError("no admissible boundary edge", pair=(j, (j + 1) % N))
        chosen[j] = (u, v)
        if t == 0:
            first_exit = u
        entry = v
    cyc = []
    for j in order:
        entry = chosen[(j - 1) % N][1]
        exit_ = chosen[j][0]
        if entry == exit_:
            raise ConstructionError("entry equals exit", block=j)
        cyc += _block_path(host, decomp.blocks[j], entry, exit_, (x, y) if j == i else None)
    witness = check_sequence(host, cyc, closed=True)
    if witness is not None:
        raise ConstructionError("glued cycle failed validation", witness=witness)
    k = cyc.index(x)
    if y not in (cyc[k - 1], cyc[(k + 1) % len(cyc)]):
        raise ConstructionError("cycle misses the required edge", edge=edge)
    return cyc
