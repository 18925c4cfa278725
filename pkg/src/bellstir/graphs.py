"""Simple undirected graphs, trees and the derived constructions used throughout.

Vertices are dense integers ``0..n-1``; labels are for display only.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[frozenset[int], ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise GraphError("adjacency length does not match n")
        for v, nb in enumerate(self.adj):
            if v in nb:
                raise GraphError(f"self-loop at {v}")
            for u in nb:
                if not 0 <= u < self.n:
                    raise GraphError(f"vertex {u} out of range")
                if v not in self.adj[u]:
                    raise GraphError(f"asymmetric edge {v}-{u}")
        if self.labels is not None and len(self.labels) != self.n:
            raise GraphError("labels length does not match n")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]], labels=None) -> "Graph":
        nb: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range")
            if v in nb[u]:
                raise GraphError(f"duplicate edge ({u}, {v})")
            nb[u].add(v)
            nb[v].add(u)
        return cls(n, tuple(frozenset(s) for s in nb), tuple(labels) if labels else None)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    @property
    def m(self) -> int:
        return sum(len(s) for s in self.adj) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels else str(v)

    def induced(self, verts: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph, relabelled densely; also returns new-id -> old-id."""
        order = sorted(verts)
        pos = {v: i for i, v in enumerate(order)}
        edges = [(pos[u], pos[v]) for u in order for v in self.adj[u] if v in pos and u < v]
        labels = [self.label(v) for v in order] if self.labels else None
        return Graph.from_edges(len(order), edges, labels), order

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"


def complement(g: Graph) -> Graph:
    every = frozenset(range(g.n))
    return Graph(g.n, tuple(every - g.adj[v] - {v} for v in range(g.n)), g.labels)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """``g`` keeps ids ``0..|g|-1``; ``h`` is shifted by ``|g|``."""
    edges = g.edges() + [(u + g.n, v + g.n) for u, v in h.edges()]
    return Graph.from_edges(g.n + h.n, edges)


def join(g: Graph, h: Graph) -> Graph:
    edges = disjoint_union(g, h).edges()
    edges += [(u, g.n + v) for u in range(g.n) for v in range(h.n)]
    return Graph.from_edges(g.n + h.n, edges)


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Pair ``(a, b)`` gets id ``a * |V(h)| + b``."""
    s = h.n
    edges = []
    for a in range(g.n):
        for b, c in h.edges():
            edges.append((a * s + b, a * s + c))
    for a, c in g.edges():
        for b in range(s):
            edges.append((a * s + b, c * s + b))
    return Graph.from_edges(g.n * s, edges)


def rook_plus(r: int, s: int) -> tuple[Graph, int, int]:
    """``K_r [] K_s`` plus a true twin of ``(0, 0)``.

    Returns ``(graph, clone_id, base_id)``; the clone is the new vertex ``r*s``.
    """
    if r < 1 or s < 1:
        raise GraphError("rook_plus needs r, s >= 1")
    rook = cartesian_product(complete(r), complete(s))
    clone, base = r * s, 0
    edges = rook.edges() + [(base, clone)] + [(u, clone) for u in sorted(rook.adj[base])]
    return Graph.from_edges(r * s + 1, edges), clone, base


MAX_HYPERCUBE_DIM = 20


def hypercube(m: int) -> Graph:
    """Vertex ``i`` is the bit string of ``i`` (most significant bit first)."""
    if m < 0 or m > MAX_HYPERCUBE_DIM:
        raise GraphError(f"hypercube dimension {m} outside 0..{MAX_HYPERCUBE_DIM}")
    size = 1 << m
    return Graph(size, tuple(frozenset(v ^ (1 << j) for j in range(m)) for v in range(size)))


def line_graph(g: Graph) -> tuple[Graph, list[tuple[int, int]]]:
    edge_index = g.edges()
    by_vertex: dict[int, list[int]] = {}
    for i, (u, v) in enumerate(edge_index):
        by_vertex.setdefault(u, []).append(i)
        by_vertex.setdefault(v, []).append(i)
    pairs = set()
    for ids in by_vertex.values():
        pairs.update(itertools.combinations(ids, 2))
    return Graph.from_edges(len(edge_index), sorted(pairs)), edge_index


def colouring_number(g: Graph) -> int:
    """Degeneracy plus one, by repeated removal of a minimum-degree vertex."""
    if g.n < 1:
        raise GraphError("colouring number needs at least one vertex")
    deg = {v: len(g.adj[v]) for v in range(g.n)}
    alive = set(range(g.n))
    worst = 0
    while alive:
        v = min(alive, key=lambda u: (deg[u], u))
        worst = max(worst, deg[v])
        alive.remove(v)
        for u in g.adj[v]:
            if u in alive:
                deg[u] -= 1
    return worst + 1


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for u in g.adj[v]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == g.n


def bipartition(g: Graph) -> tuple[list[int], list[int]] | None:
    """Two-colouring by BFS (component roots coloured 0), or None on an odd cycle."""
    side = [-1] * g.n
    for root in range(g.n):
        if side[root] >= 0:
            continue
        side[root] = 0
        queue = [root]
        for v in queue:
            for u in g.adj[v]:
                if side[u] < 0:
                    side[u] = 1 - side[v]
                    queue.append(u)
                elif side[u] == side[v]:
                    return None
    return [v for v in range(g.n) if side[v] == 0], [v for v in range(g.n) if side[v] == 1]


# -- named families -------------------------------------------------------


def empty(n: int) -> Graph:
    return Graph.from_edges(n, [])


def complete(n: int) -> Graph:
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def complete_minus_edge(n: int) -> Graph:
    if n < 2:
        raise GraphError("K_n - e needs n >= 2")
    return Graph.from_edges(n, [e for e in itertools.combinations(range(n), 2) if e != (0, 1)])


def star(n: int) -> Graph:
    """``K_{1,n}`` with centre 0 and leaves ``1..n``."""
    if n < 1:
        raise GraphError("star needs n >= 1")
    return Graph.from_edges(n + 1, [(0, i) for i in range(1, n + 1)])


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def l_nn(n: int) -> Graph:
    """``K_{n,n}`` minus the perfect matching ``{i, n+i}``."""
    if n < 1:
        raise GraphError("L_{n,n} needs n >= 1")
    return Graph.from_edges(2 * n, [(i, n + j) for i in range(n) for j in range(n) if i != j])


def g_t(t: int) -> Graph:
    """``K_{2t}`` minus the matching ``{2i, 2i+1}``."""
    if t < 1:
        raise GraphError("G_t needs t >= 1")
    return Graph.from_edges(
        2 * t,
        [(u, v) for u, v in itertools.combinations(range(2 * t), 2) if not (u // 2 == v // 2)],
    )


def tree_from_pruefer(seq: Sequence[int], n: int | None = None) -> Graph:
    n = len(seq) + 2 if n is None else n
    if n < 2 or len(seq) != n - 2 or any(not 0 <= a < n for a in seq):
        raise GraphError(f"invalid Pruefer sequence {list(seq)} for n={n}")
    degree = [1] * n
    for a in seq:
        degree[a] += 1
    edges = []
    for a in seq:
        leaf = min(v for v in range(n) if degree[v] == 1)
        edges.append((leaf, a))
        degree[leaf] -= 1
        degree[a] -= 1
    u, v = (w for w in range(n) if degree[w] == 1)
    edges.append((u, v))
    return Graph.from_edges(n, edges)


def tree_canonical_form(g: Graph) -> str:
    """AHU encoding rooted at the centre(s); equal iff the trees are isomorphic."""
    if g.n <= 2:
        return f"n{g.n}"
    deg = [g.degree(v) for v in range(g.n)]
    layer = [v for v in range(g.n) if deg[v] == 1]
    remaining = g.n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            for u in g.adj[v]:
                deg[u] -= 1
                if deg[u] == 1:
                    nxt.append(u)
        layer = nxt
    centres = layer

    def encode(v, parent):
        return "(" + "".join(sorted(encode(u, v) for u in g.adj[v] if u != parent)) + ")"

    return min(encode(c, -1) for c in centres)


def all_trees(n: int, up_to_iso: bool = False) -> Iterator[Graph]:
    """Every labelled tree on ``n`` vertices via Pruefer sequences (``n^(n-2)`` of them)."""
    if n < 1:
        raise GraphError("all_trees needs n >= 1")
    if n == 1:
        yield empty(1)
        return
    seen = set()
    for seq in itertools.product(range(n), repeat=n - 2):
        t = tree_from_pruefer(seq, n)
        if up_to_iso:
            key = tree_canonical_form(t)
            if key in seen:
                continue
            seen.add(key)
        yield t


def nonisomorphic_trees(n: int) -> list[Graph]:
    """Catalogue of unlabelled trees (networkx generator, relabelled deterministically)."""
    import networkx as nx

    if n == 1:
        return [empty(1)]
    if n == 2:
        return [path(2)]
    return [Graph.from_edges(n, sorted(tuple(sorted(e)) for e in t.edges())) for t in nx.nonisomorphic_trees(n)]


def nonisomorphic_graphs(n: int) -> list[Graph]:
    """All graphs on ``n <= 7`` vertices up to isomorphism, from the networkx atlas."""
    import networkx as nx

    if not 0 <= n <= 7:
        raise GraphError("the graph atlas covers n <= 7")
    return [
        Graph.from_edges(n, sorted(tuple(sorted(e)) for e in h.edges()))
        for h in nx.graph_atlas_g()
        if h.number_of_nodes() == n
    ]


MAX_CANON_N = 8


def canonical_form(g: Graph) -> tuple[int, tuple[tuple[int, int], ...]]:
    """Exhaustive canonical labelling (lexicographically least edge list)."""
    if g.n > MAX_CANON_N:
        raise GraphError(f"canonical_form limited to n <= {MAX_CANON_N}")
    edges = g.edges()
    best = None
    for perm in itertools.permutations(range(g.n)):
        key = tuple(sorted(tuple(sorted((perm[u], perm[v]))) for u, v in edges))
        if best is None or key < best:
            best = key
    return g.n, best or ()


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m:
        return False
    if sorted(map(len, g.adj)) != sorted(map(len, h.adj)):
        return False
    return canonical_form(g) == canonical_form(h)


def find_isomorphism(g: Graph, h: Graph) -> list[int] | None:
    """Brute-force map ``phi`` with ``uv in E(g) <=> phi(u)phi(v) in E(h)``."""
    if g.n != h.n or g.m != h.m:
        return None
    if g.n > MAX_CANON_N:
        raise GraphError(f"find_isomorphism limited to n <= {MAX_CANON_N}")
    target = set(h.edges())
    for perm in itertools.permutations(range(g.n)):
        if all(tuple(sorted((perm[u], perm[v]))) in target for u, v in g.edges()):
            return list(perm)
    return None


@dataclass(frozen=True)
class Tree:
    graph: Graph
    two_colouring: tuple[tuple[int, ...], tuple[int, ...]]
    leaves: tuple[int, ...]

    @classmethod
    def of(cls, g: Graph) -> "Tree":
        if g.n < 1 or g.m != g.n - 1 or not is_connected(g):
            raise GraphError("not a tree")
        parts = bipartition(g)
        assert parts is not None
        a, b = parts
        return cls(g, (tuple(a), tuple(b)), tuple(v for v in range(g.n) if g.degree(v) == 1))

    @property
    def n(self) -> int:
        return self.graph.n


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and is_connected(g)


def bits_of(value: int, m: int) -> tuple[int, ...]:
    return tuple((value >> (m - 1 - j)) & 1 for j in range(m))


def value_of(bits: Sequence[int]) -> int:
    out = 0
    for b in bits:
        out = (out << 1) | b
    return out
