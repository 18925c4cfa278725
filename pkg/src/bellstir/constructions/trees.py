"""Hamilton paths and cycles in the 3-, 4- and k-Stirling colour graphs of trees.

All recursion works on vertex subsets of one fixed tree, so partitions keep the
original vertex ids throughout.
"""

from __future__ import annotations

import itertools
from collections import deque
from functools import cached_property

from ..colour_graphs import build
from ..graphs import Graph, GraphError, Tree, find_isomorphism, is_tree
from ..partitions import BELL, STIRLING, canonical, iter_partitions, quick_adjacent, restrict
from .base import stirling_base_items
from .cgraph import CGraphDecomposition, c_graph_cycle_through_edge
from .cube import star_b3_items
from .decorated import CYCLE, PATH, ConstructionError, certify

SEARCH_LIMIT = 200_000


class SubTree:
    """The subtree of ``g`` induced by ``verts``."""

    def __init__(self, g: Graph, verts):
        self.g = g
        self.verts = frozenset(verts)

    def __len__(self):
        return len(self.verts)

    def nbrs(self, v) -> frozenset:
        return self.g.adj[v] & self.verts

    def deg(self, v) -> int:
        return len(self.nbrs(v))

    @cached_property
    def leaves(self) -> list[int]:
        return sorted(v for v in self.verts if self.deg(v) == 1)

    @cached_property
    def two_colouring(self) -> tuple[frozenset, frozenset]:
        start = min(self.verts)
        side = {start: 0}
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for u in self.nbrs(v):
                if u not in side:
                    side[u] = 1 - side[v]
                    queue.append(u)
        a = frozenset(v for v, s in side.items() if s == 0)
        return a, self.verts - a

    def minus(self, *vs) -> "SubTree":
        return SubTree(self.g, self.verts - set(vs))

    def star_centre(self):
        for v in sorted(self.verts):
            if self.deg(v) == len(self) - 1:
                return v
        return None

    def parent(self, leaf) -> int:
        (p,) = self.nbrs(leaf)
        return p

    def farthest(self, src) -> int:
        dist = {src: 0}
        queue = deque([src])
        while queue:
            v = queue.popleft()
            for u in self.nbrs(v):
                if u not in dist:
                    dist[u] = dist[v] + 1
                    queue.append(u)
        best = max(dist.values())
        return min(v for v, d in dist.items() if d == best)

    def default_leaf(self) -> int:
        """An end of a longest path (the least-id farthest vertex from the least id)."""
        return self.farthest(min(self.verts))

    def graph(self):
        return self.g.induced(self.verts)


def _as_graph(t) -> Graph:
    g = t.graph if isinstance(t, Tree) else t
    if not is_tree(g):
        raise GraphError("input is not a tree")
    return g


def readings(p, a_side: frozenset, b_side: frozenset) -> list[int]:
    """Vertices ``a`` with ``p == {A - a, B - a, {a}}``."""
    if len(p) != 3:
        return []
    out = []
    for (v,) in (c for c in p if len(c) == 1):
        if canonical([a_side - {v}, b_side - {v}, [v]]) == p:
            out.append(v)
    return out


def _two_colouring_partition(sub: SubTree):
    return canonical(sub.two_colouring)


# ---------------------------------------------------------------- small trees

_L = dict(zip("abcde", range(5)))


def _p(text):
    return canonical([[_L[ch] for ch in cell] for cell in text.split("|")])


_P5_NODES = {
    1: _p("ad|c|be"), 2: _p("ad|b|ce"), 3: _p("ace|b|d"), 4: _p("ac|be|d"),
    5: _p("a|bd|ce"), 6: _p("ae|bd|c"), 7: _p("ac|bd|e"),
}
_SPIDER_NODES = {
    1: _p("ab|ce|d"), 2: _p("a|bd|ce"), 3: _p("abd|c|e"), 4: _p("ad|b|ce"),
    5: _p("ad|be|c"), 6: _p("ae|bd|c"), 7: _p("abe|c|d"),
}

# tree edges on a..e and the highlighted Hamilton paths of S_3
STORED_PATHS = {
    "P4": (
        [(0, 1), (1, 2), (2, 3)],
        [[_p("a|c|bd"), _p("ad|b|c"), _p("ac|b|d")]],
    ),
    "P5": (
        [(0, 1), (1, 2), (2, 3), (3, 4)],
        [[_P5_NODES[i] for i in (3, 2, 1, 4, 7, 6, 5)], [_P5_NODES[i] for i in (3, 4, 1, 2, 5, 6, 7)]],
    ),
    "spider": (
        [(0, 2), (1, 2), (2, 3), (3, 4)],
        [[_SPIDER_NODES[i] for i in (1, 7, 5, 4, 2, 6, 3)], [_SPIDER_NODES[i] for i in (2, 1, 7, 6, 3, 5, 4)]],
    ),
}


def _choose_readings(first, last, sides, x):
    """Distinct readings ``a`` of ``first`` and ``b`` of ``last``, both unequal to ``x``."""
    for a in readings(first, *sides):
        for b in readings(last, *sides):
            if a != b and x not in (a, b):
                return a, b
    return None


def _stored_cycle(sub: SubTree, x):
    local, order = sub.graph()
    for name, (edges, paths) in STORED_PATHS.items():
        ref = Graph.from_edges(local.n, edges)
        if ref.n != local.n or len(edges) != local.m:
            continue
        phi = find_isomorphism(ref, local)
        if phi is None:
            continue
        for path in paths:
            mapped = [canonical([[order[phi[v]] for v in cell] for cell in p]) for p in path]
            for seq in (mapped, mapped[::-1]):
                if _choose_readings(seq[0], seq[-1], sub.two_colouring, x):
                    return [_two_colouring_partition(sub)] + seq
        raise ConstructionError("no stored path fits the endpoint constraint", tree=name, x=x)
    raise ConstructionError("tree has no stored base case", verts=sorted(sub.verts))


# ---------------------------------------------------------------- B_3 splice


def _slots(u, p):
    return [i for i, c in enumerate(u) if p not in c] + ([None] if len(u) < 3 else [])


def _square(u, l1, p1, l2, p2):
    """The 4-cycle of extensions of ``u``: l1 chooses a slot avoiding p1, l2 one avoiding p2."""
    s1, s2 = _slots(u, p1), _slots(u, p2)

    def put(i, j):
        cells = [list(c) for c in u]
        new = []
        for leaf, slot in ((l1, s1[i]), (l2, s2[j])):
            if slot is None:
                new.append(leaf)
            else:
                cells[slot].append(leaf)
        return canonical(cells + [new])

    return [put(0, 0), put(1, 0), put(1, 1), put(0, 1)]


class _Ring:
    """A cyclic sequence with O(1) splicing."""

    def __init__(self, items):
        self.succ = {}
        self.pred = {}
        for a, b in zip(items, items[1:] + items[:1]):
            self.succ[a] = b
            self.pred[b] = a

    def splice(self, u1, u2, seq):
        """Replace the edge u1 -> u2 by u1 -> seq -> u2."""
        prev = u1
        for q in seq:
            self.succ[prev] = q
            self.pred[q] = prev
            prev = q
        self.succ[prev] = u2
        self.pred[u2] = prev

    def unsplice(self, u1, u2, seq):
        for q in seq:
            del self.succ[q]
            del self.pred[q]
        self.succ[u1] = u2
        self.pred[u2] = u1

    def walk(self, start):
        out = [start]
        v = self.succ[start]
        while v != start:
            out.append(v)
            v = self.succ[v]
        return out


def _splice_options(ring, prev_sq, next_sq, first):
    opts = []
    members = set(prev_sq)
    if first:
        s1 = prev_sq[0]
        edges = [(s1, prev_sq[1]), (prev_sq[3], s1)]
    else:
        edges = [(u, ring.succ[u]) for u in prev_sq if ring.succ[u] in members]
    for u1, u2 in edges:
        for j1, q1 in enumerate(next_sq):
            if not quick_adjacent(u1, q1):
                continue
            for j2 in ((j1 + 1) % 4, (j1 - 1) % 4):
                q2 = next_sq[j2]
                if not quick_adjacent(u2, q2):
                    continue
                step = -1 if j2 == (j1 + 1) % 4 else 1
                seq = [next_sq[(j1 + step * t) % 4] for t in range(4)]
                opts.append((u1, u2, seq))
    return opts


def _lift_b3(sub: SubTree, x, base_cycle, l1, p1, l2, p2):
    squares = [_square(u, l1, p1, l2, p2) for u in base_cycle]
    ring = _Ring(squares[0])
    sides = sub.two_colouring
    s1 = squares[0][0]
    k = len(squares)
    stack = []
    i = 1
    opts = _splice_options(ring, squares[0], squares[1], True)
    budget = SEARCH_LIMIT
    while True:
        budget -= 1
        if budget < 0:
            raise ConstructionError("B_3 splice search exhausted", verts=sorted(sub.verts), x=x)
        if not opts:
            if not stack:
                raise ConstructionError("no splice sequence for the B_3 lift", verts=sorted(sub.verts), x=x)
            i, opts, done = stack.pop()
            ring.unsplice(*done)
            continue
        u1, u2, seq = opts.pop(0)
        ring.splice(u1, u2, seq)
        if i == 1 and not _choose_readings(ring.succ[s1], ring.pred[s1], sides, x):
            ring.unsplice(u1, u2, seq)
            continue
        stack.append((i, opts, (u1, u2, seq)))
        if i + 1 == k:
            return ring.walk(s1)
        i += 1
        opts = _splice_options(ring, squares[i - 1], squares[i], False)


def _lift_choices(sub: SubTree, x):
    """(l1, l2, z, orientation) in preference order: the first is the standard choice."""
    leaves = sub.leaves
    if x in leaves:
        pairs = [(x, v, sub.parent(x)) for v in leaves if sub.parent(v) != sub.parent(x)]
    else:
        pairs = [(a, b, x) for a, b in itertools.permutations(leaves, 2) if sub.parent(a) != sub.parent(b)]
    for l1, l2, z in pairs:
        for orient in (1, -1):
            yield l1, l2, z, orient


def _b3_cycle(sub: SubTree, x, memo) -> list:
    """Hamilton cycle of ``B_3`` on ``sub`` starting at its 2-colouring; the
    2-colouring's neighbours read as singletons avoiding ``x``."""
    key = ("b3", sub.verts, x)
    if key in memo:
        return memo[key]
    n = len(sub)
    if n < 4:
        raise ValueError("needs at least 4 vertices")
    centre = sub.star_centre()
    if centre is not None:
        items = star_b3_items(centre, [v for v in sub.verts if v != centre], x)
    elif n == 5 or n == 4:
        items = _stored_cycle(sub, x)
    else:
        items = None
        for l1, l2, z, orient in _lift_choices(sub, x):
            p1, p2 = sub.parent(l1), sub.parent(l2)
            base = _b3_cycle(sub.minus(l1, l2), z, memo)
            if orient < 0:
                base = base[:1] + base[1:][::-1]
            try:
                items = _lift_b3(sub, x, base, l1, p1, l2, p2)
            except ConstructionError:
                memo.setdefault("b3-retries", []).append((sorted(sub.verts), x, l1, l2, orient))
                continue
            break
        if items is None:
            raise ConstructionError("no leaf pair or orientation admits the B_3 lift", verts=sorted(sub.verts), x=x)
    memo[key] = items
    return items


def _s3_endpoints(sub: SubTree, x, memo):
    """(a, b, path) for the S_3 Hamilton path with singleton ends avoiding ``x``."""
    cyc = _b3_cycle(sub, x, memo)
    path = cyc[1:]
    ab = _choose_readings(path[0], path[-1], sub.two_colouring, x)
    if ab is None:
        raise ConstructionError("path ends do not satisfy the singleton contract", x=x)
    return ab[0], ab[1], path


def s3_path_with_endpoints(t, x: int):
    """Hamilton path of ``S_3(t)`` whose ends are ``{A-a, B-a, {a}}`` and ``{A-b, B-b, {b}}``, ``x`` not in ``{a, b}``."""
    g = _as_graph(t)
    if g.n < 4:
        raise ValueError("s3_path_with_endpoints needs at least 4 vertices")
    if not 0 <= x < g.n:
        raise ValueError(f"{x} is not a vertex")
    a, b, path = _s3_endpoints(SubTree(g, range(g.n)), x, {})
    cert = certify(build(g, 3, STIRLING), path, PATH, anchors={"a": a, "b": b})
    return a, b, cert


def b3_tree_cycle(t):
    """Hamilton cycle of ``B_3(t)`` for a tree on at least 4 vertices."""
    g = _as_graph(t)
    if g.n < 4:
        raise ValueError("b3_tree_cycle needs at least 4 vertices")
    items = _b3_cycle(SubTree(g, range(g.n)), None, {})
    return certify(build(g, 3, BELL), items, CYCLE)


def s3_tree_ham_path(t):
    """Hamilton path of ``S_3(t)`` for a tree on at least 3 vertices."""
    g = _as_graph(t)
    if g.n < 3:
        raise ValueError("s3_tree_ham_path needs at least 3 vertices")
    if g.n == 3:
        items = [tuple((v,) for v in range(3))]
    else:
        items = _b3_cycle(SubTree(g, range(g.n)), None, {})[1:]
    return certify(build(g, 3, STIRLING), items, PATH)


# ---------------------------------------------------------------- S_k base


def _with_leaf(p, leaf):
    return canonical(list(p) + [[leaf]])


def _base_splice(sub: SubTree, k: int, leaf: int, memo):
    """``S_k`` cycle of a ``(k+1)``-vertex tree keeping the {leaf}-singleton part contiguous."""
    s = sub.parent(leaf)
    rest = sub.minus(leaf)
    if k == 4:
        path = _b3_cycle(rest, None, memo)[1:]
    else:
        path = stirling_base_items(sub.g, rest.verts)
    pair_first = next(c for c in path[0] if len(c) == 2)
    pair_last = next(c for c in path[-1] if len(c) == 2)
    v1, v2 = next(
        (a, b) for a in pair_first for b in pair_last if a != b and s not in (a, b)
    )

    def sigma(v):
        return canonical([[leaf, v]] + [[w] for w in rest.verts if w != v])

    others = [sigma(v) for v in sorted(rest.verts) if v not in (s, v1, v2)]
    items = [_with_leaf(p, leaf) for p in path] + [sigma(v2)] + others + [sigma(v1)]
    flags = [True] * len(path) + [False] * (len(items) - len(path))
    return items, flags


# ---------------------------------------------------------------- S_4


def _triangle(u, leaf, p):
    return [canonical([list(c) + [leaf] if i == j else list(c) for i, c in enumerate(u)]) for j in range(len(u)) if p not in u[j]]


def _triangle_walk(tris, s1, targets):
    """Path s1 -> C_{v_2} -> ... -> C_{v_k} entering each triangle at t_i and
    leaving at s_i; the last vertex must be adjacent to one of ``targets``."""
    k = len(tris)
    stack = []
    prev = s1
    i = 1
    opts = None
    budget = SEARCH_LIMIT
    chosen = []
    while True:
        budget -= 1
        if budget < 0:
            return None
        if opts is None:
            ts = [q for q in tris[i] if quick_adjacent(prev, q)]
            opts = []
            for t in ts:
                for s in tris[i]:
                    if s == t:
                        continue
                    nxt = tris[(i + 1) % k] if i + 1 < k else None
                    if nxt is None:
                        hit = [g for g in targets if quick_adjacent(s, g)]
                        if hit:
                            opts.append((t, s, hit[0]))
                    elif any(quick_adjacent(s, q) for q in nxt):
                        opts.append((t, s, None))
        if not opts:
            if not stack:
                return None
            i, opts, prev = stack.pop()
            chosen.pop()
            continue
        t, s, hit = opts.pop(0)
        middle = next(q for q in tris[i] if q not in (t, s))
        chosen.append((t, middle, s))
        if i + 1 == k:
            return [q for trio in chosen for q in trio], hit
        stack.append((i, opts, prev))
        prev = s
        i += 1
        opts = None


def _s4_cycle(sub: SubTree, leaf: int, memo):
    key = ("s4", sub.verts, leaf)
    if key in memo:
        return memo[key]
    if len(sub) < 5:
        raise ValueError("S_4 needs at least 5 vertices")
    if len(sub) == 5:
        memo[key] = _base_splice(sub, 4, leaf, memo)
        return memo[key]
    p = sub.parent(leaf)
    rest = sub.minus(leaf)
    big, _ = _s4_cycle(rest, rest.default_leaf(), memo)
    in_big = set(big)
    a_side, b_side = rest.two_colouring
    if p in a_side:
        a_side, b_side = b_side, a_side
    cyc3 = _b3_cycle(rest, p, memo)
    path = cyc3[1:]
    for a, b in itertools.product(readings(path[0], *rest.two_colouring), readings(path[-1], *rest.two_colouring)):
        if a == b or p in (a, b):
            continue
        ab = {a, b}
        v1 = canonical([a_side - ab, b_side - ab, [a], [b]])
        if len(v1) != 4 or v1 not in in_big:
            continue
        e_a = canonical([a_side - ab, b_side - ab, [a, leaf], [b]])
        e_b = canonical([a_side - ab, b_side - ab, [a], [b, leaf]])
        s1 = canonical([(a_side - ab) | {leaf}, b_side - ab, [a], [b]])
        star = [_with_leaf(q, leaf) for q in path]  # a-end first
        i = big.index(v1)
        for order in (big[i:] + big[:i], [big[i]] + big[:i][::-1] + big[i + 1 :][::-1]):
            tris = [_triangle(u, leaf, p) for u in order]
            found = _triangle_walk(tris, s1, [e_a, e_b])
            if found is None:
                continue
            walk, hit = found
            if hit == e_a:
                items = [e_a] + star[::-1] + [e_b, s1] + walk
            else:
                items = [e_b] + star + [e_a, s1] + walk
            flags = [(leaf,) in q for q in items]
            memo[key] = (items, flags)
            return memo[key]
    raise ConstructionError("S_4 lift failed for every choice of ends", verts=sorted(sub.verts), leaf=leaf)


# ---------------------------------------------------------------- S_k, k >= 5


def glue_form(alpha, beta, s):
    """``(w, y)`` when ``alpha`` has singleton ``{y}``, ``beta`` moves ``w`` from a
    cell of size >= 2 into it, and neither equals ``s``; else None."""
    for cell in beta:
        if len(cell) != 2:
            continue
        for w, y in (cell, cell[::-1]):
            if s in (w, y) or (y,) not in alpha:
                continue
            cw = next(c for c in alpha if w in c)
            if len(cw) >= 2 and restrict(alpha, w) == restrict(beta, w):
                return w, y
    return None


def _degree_two_case(alpha, beta, sub_rest: SubTree, s, k):
    """Whether (alpha, beta) has the explicit shape used when the leaf's neighbour has degree 2."""
    form = glue_form(alpha, beta, s)
    if form is None or (s,) not in alpha:
        return None
    w, x1 = form
    ycell = next(c for c in alpha if w in c)
    others = [c for c in alpha if c not in ((s,), (x1,), ycell)]
    for xcell in others:
        singles = [c for c in others if c != xcell]
        if any(len(c) != 1 for c in singles) or len(singles) != k - 5:
            continue
        core = SubTree(sub_rest.g, set(xcell) | set(ycell))
        if _connected(core) and set(map(frozenset, core.two_colouring)) == {frozenset(xcell), frozenset(ycell)}:
            return form
    return None


def _connected(sub: SubTree) -> bool:
    start = min(sub.verts)
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for u in sub.nbrs(v):
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == len(sub)


def _glue(sub: SubTree, k, leaf, s, small, ia, ib, big, memo):
    """Join the S_{k-1} cycle ``small`` (cut at alpha=small[ia], beta=small[ib]) into
    the lifted S_k cycle ``big`` of ``sub - leaf``."""
    alpha, beta = small[ia], small[ib]
    w, y = glue_form(alpha, beta, s)
    m = len(small)
    if small[(ia + 1) % m] == beta:
        path = [small[(ia - t) % m] for t in range(m)]
    else:
        path = [small[(ia + t) % m] for t in range(m)]
    assert path[0] == alpha and path[-1] == beta
    f0 = canonical([c for c in beta if c != tuple(sorted((w, y)))] + [[w], [y]])
    i = big.index(f0)
    ring = big[i:] + big[:i]
    blocks_items = []
    for u in ring:
        blocks_items.append([canonical([list(c) + [leaf] if j == t else list(c) for j, c in enumerate(u)]) for t in range(len(u)) if s not in u[t]])
    ids = {}
    blocks = []
    for blk in blocks_items:
        blocks.append([])
        for q in blk:
            ids[q] = len(ids)
            blocks[-1].append(ids[q])
    items_of = list(ids)
    edges = set()
    nb = len(blocks)
    for j, blk in enumerate(blocks):
        edges.update(itertools.combinations(blk, 2))
        for u in blk:
            for v in blocks[(j + 1) % nb]:
                if quick_adjacent(items_of[u], items_of[v]):
                    edges.add((min(u, v), max(u, v)))
    host = Graph.from_edges(len(ids), sorted(edges))
    a = canonical([c for c in f0 if c != (w,)] + [[w, leaf]])
    b = canonical([c for c in f0 if c != (y,)] + [[y, leaf]])
    cyc = c_graph_cycle_through_edge(host, CGraphDecomposition(blocks), (ids[a], ids[b]))
    cyc = [items_of[v] for v in cyc]
    ja = cyc.index(a)
    if cyc[(ja + 1) % len(cyc)] != b:
        cyc = cyc[::-1]
        ja = cyc.index(a)
    jb = (ja + 1) % len(cyc)
    rot = cyc[jb:] + cyc[:jb]  # b ... a
    lifted = [_with_leaf(q, leaf) for q in path]
    items = [a] + lifted + rot[:-1]
    flags = [False] + [True] * len(lifted) + [False] * (len(rot) - 1)
    return items, flags


def _sk_cycle(sub: SubTree, k: int, leaf, memo, notes):
    if leaf is None:
        leaf = sub.default_leaf()
    key = ("sk", sub.verts, k, leaf)
    if key in memo:
        return memo[key]
    n = len(sub)
    if n < k + 1:
        raise ValueError(f"S_{k} needs at least {k + 1} vertices")
    if k == 4:
        out = _s4_cycle(sub, leaf, memo)
    elif n == k + 1:
        out = _base_splice(sub, k, leaf, memo)
    else:
        s = sub.parent(leaf)
        rest = sub.minus(leaf)
        big, _ = _sk_cycle(rest, k, None, memo, notes)
        twins = [v for v in rest.nbrs(s) if v in sub.leaves and v != leaf]
        m = None
        if twins:
            small, flags = _sk_cycle(rest, k - 1, min(twins), memo, notes)
            case = "shared-neighbour"
            m = len(small)
            for i in range(m):
                j = (i + 1) % m
                if flags[i] != flags[j]:
                    ia, ib = (i, j) if flags[i] else (j, i)
                    if glue_form(small[ia], small[ib], s):
                        break
            else:
                ia = None
        elif sub.deg(s) == 2:
            small, flags = _sk_cycle(rest, k - 1, s, memo, notes)
            case = "degree-two"
            m = len(small)
            ia = None
            for i in range(m):
                j = (i + 1) % m
                for p, q in ((i, j), (j, i)):
                    if _degree_two_case(small[p], small[q], rest, s, k):
                        ia, ib = p, q
                        break
                if ia is not None:
                    break
        else:
            small, flags = _sk_cycle(rest, k - 1, None, memo, notes)
            case = "other"
            m = len(small)
            ia = None
        if ia is None:
            for i in range(m):
                j = (i + 1) % m
                for p, q in ((i, j), (j, i)):
                    if glue_form(small[p], small[q], s):
                        ia, ib = p, q
                        break
                if ia is not None:
                    break
            notes.append({"verts": sorted(sub.verts), "k": k, "leaf": leaf, "case": case,
                          "fallback": "generic consecutive pair", "found": ia is not None})
            if ia is None:
                raise ConstructionError("no consecutive pair of the gluing form", verts=sorted(sub.verts), k=k, leaf=leaf)
        out = _glue(sub, k, leaf, s, small, ia, ib, big, memo)
    memo[key] = out
    return out


def s4_tree_cycle(t, leaf: int | None = None):
    """Hamilton cycle of ``S_4(t)`` for a tree on at least 5 vertices."""
    return sk_tree_cycle(t, 4, leaf)


def sk_tree_cycle(t, k: int, leaf: int | None = None):
    """Hamilton cycle of ``S_k(t)``, ``k >= 4``, for a tree on at least ``k+1`` vertices.

    The decoration marks the colourings where ``leaf`` is a singleton; they
    form one arc of the cycle.
    """
    g = _as_graph(t)
    if k < 4:
        raise ValueError("sk_tree_cycle needs k >= 4")
    if g.n < k + 1:
        raise ValueError(f"S_{k} of a tree on {g.n} vertices has at most one vertex")
    sub = SubTree(g, range(g.n))
    if leaf is None:
        leaf = sub.default_leaf()
    elif leaf not in sub.leaves:
        raise ValueError(f"{leaf} is not a leaf")
    notes: list = []
    items, flags = _sk_cycle(sub, k, leaf, {}, notes)
    cert = certify(build(g, k, STIRLING), items, CYCLE, leaf=leaf, diagnostics=notes)
    assert cert.singleton == flags
    return cert
