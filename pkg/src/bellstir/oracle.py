"""Brute-force ground truth: Hamilton cycle/path search and certificate checking.

A search either finds a certificate, proves absence by exhausting the search
space (or by a necessary condition failing), or runs out of budget.  The last
outcome is reported as INCONCLUSIVE and is never conflated with absence.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass

from .graphs import Graph, bipartition, is_connected

FOUND = "found"
ABSENT = "absent"
INCONCLUSIVE = "inconclusive"

DEFAULT_BUDGET = 10**8


def default_budget() -> int:
    env = os.environ.get("BELLSTIR_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


@dataclass
class OracleResult:
    status: str
    sequence: list[int] | None = None
    expansions: int = 0
    reason: str = ""

    @property
    def found(self) -> bool:
        return self.status == FOUND


def check_sequence(g: Graph, seq, closed: bool, spanning: bool = True):
    """The single definition of a valid certificate.

    Returns ``None`` when ``seq`` is a valid Hamilton cycle (``closed``) or
    path, otherwise a witness tuple naming the first violation.
    """
    seen = set()
    for v in seq:
        if not 0 <= v < g.n:
            return ("not a vertex", v)
        if v in seen:
            return ("repeat", v)
        seen.add(v)
    if spanning and len(seen) != g.n:
        return ("missing", min(set(range(g.n)) - seen))
    for a, b in zip(seq, seq[1:]):
        if not g.has_edge(a, b):
            return ("non-edge", a, b)
    if closed:
        if len(seq) < 3:
            return ("too short for a cycle", len(seq))
        if not g.has_edge(seq[-1], seq[0]):
            return ("not closed", seq[-1], seq[0])
    return None


def articulation_points(g: Graph) -> set[int]:
    disc = [-1] * g.n
    low = [0] * g.n
    out = set()
    timer = 0
    for root in range(g.n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = timer
        timer += 1
        children = 0
        stack = [(root, -1, iter(sorted(g.adj[root])))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for u in it:
                if disc[u] < 0:
                    disc[u] = low[u] = timer
                    timer += 1
                    if v == root:
                        children += 1
                    stack.append((u, v, iter(sorted(g.adj[u]))))
                    advanced = True
                    break
                if u != parent:
                    low[v] = min(low[v], disc[u])
            if advanced:
                continue
            stack.pop()
            if stack:
                p = stack[-1][0]
                low[p] = min(low[p], low[v])
                if p != root and low[v] >= disc[p]:
                    out.add(p)
        if children > 1:
            out.add(root)
    return out


def _quick_absence(g: Graph) -> str | None:
    if g.n < 3:
        return "fewer than 3 vertices"
    if min(len(a) for a in g.adj) < 2:
        return "vertex of degree < 2"
    if not is_connected(g):
        return "disconnected"
    if articulation_points(g):
        return "cut vertex"
    parts = bipartition(g)
    if parts is not None and len(parts[0]) != len(parts[1]):
        return "unbalanced bipartite"
    return None


def _search_cycle(g: Graph, budget: int) -> OracleResult:
    n, adj = g.n, g.adj
    parts = bipartition(g)
    side = None
    if parts is not None:
        side = [0] * n
        for v in parts[1]:
            side[v] = 1
    start = min(range(n), key=lambda v: (len(adj[v]), v))
    near_start = adj[start]
    visited = bytearray(n)
    rem = [len(a) for a in adj]
    unvisited_side = [0, 0]
    if side is not None:
        for v in range(n):
            unvisited_side[side[v]] += 1
    check_every = 1 if n <= 128 else 32

    def visit(v):
        visited[v] = 1
        for w in adj[v]:
            rem[w] -= 1
        if side is not None:
            unvisited_side[side[v]] -= 1

    def unvisit(v):
        visited[v] = 0
        for w in adj[v]:
            rem[w] += 1
        if side is not None:
            unvisited_side[side[v]] += 1

    def connected_rest(end):
        left = n - len(path)
        seed = next(w for w in adj[end] if not visited[w])
        seen = {seed}
        stack = [seed]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if not visited[w] and w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == left

    def candidates(prev, end):
        """Ordered next vertices after extending to ``end``; None if pruned."""
        left = n - len(path)
        if left == 0:
            return [] if start in adj[end] else None
        if rem[start] == 0 or rem[end] == 0:
            return None
        if left == 1:
            (w,) = [w for w in adj[end] if not visited[w]]
            return [w] if w in near_start else None
        if side is not None:
            # end, u1..um, start alternate sides
            m = left
            want_other = (m + 1) // 2
            other = 1 - side[end]
            if unvisited_side[other] != want_other or unvisited_side[1 - other] != m - want_other:
                return None
            last_side = other if m % 2 == 1 else side[end]
            if side[start] == last_side:
                return None
        if prev is not None:
            for w in adj[prev]:
                if not visited[w]:
                    opts = rem[w] + (w in adj[end]) + (w in near_start)
                    if opts < 2:
                        return None
        forced = []
        cands = []
        for w in adj[end]:
            if visited[w]:
                continue
            own = rem[w] + (w in near_start)
            if own < 1:
                return None
            if own == 1:
                forced.append(w)
            cands.append(w)
        if len(forced) > 1:
            return None
        if len(path) % check_every == 0 and not connected_rest(end):
            return None
        if forced:
            return forced
        cands.sort(key=lambda w: (rem[w], w))
        return cands

    path = [start]
    visit(start)
    expansions = 0
    first = candidates(None, start)
    if first is None:
        return OracleResult(ABSENT, expansions=0, reason="pruned at root")
    stack = [(first, 0)]
    while stack:
        cands, i = stack[-1]
        if i >= len(cands):
            stack.pop()
            if len(path) > 1:
                unvisit(path.pop())
            continue
        stack[-1] = (cands, i + 1)
        w = cands[i]
        expansions += 1
        if expansions > budget:
            return OracleResult(INCONCLUSIVE, expansions=expansions, reason="budget exceeded")
        prev = path[-1]
        path.append(w)
        visit(w)
        nxt = candidates(prev, w)
        if nxt is None:
            unvisit(path.pop())
            continue
        if len(path) == n:
            return OracleResult(FOUND, list(path), expansions)
        stack.append((nxt, 0))
    return OracleResult(ABSENT, expansions=expansions, reason="search exhausted")


def find_hamilton_cycle(g: Graph, budget: int | None = None) -> OracleResult:
    budget = default_budget() if budget is None else budget
    why = _quick_absence(g)
    if why is not None:
        return OracleResult(ABSENT, reason=why)
    res = _search_cycle(g, budget)
    if res.found:
        assert check_sequence(g, res.sequence, closed=True) is None
    return res


def find_hamilton_path(g: Graph, u: int, v: int, budget: int | None = None) -> OracleResult:
    """Hamilton path from ``u`` to ``v`` via a cycle through an added degree-2 vertex."""
    if u == v:
        raise ValueError("path endpoints must differ")
    if g.n == 2:
        ok = g.has_edge(u, v)
        return OracleResult(FOUND, [u, v]) if ok else OracleResult(ABSENT, reason="non-adjacent pair")
    z = g.n
    adj = list(g.adj) + [frozenset({u, v})]
    adj[u] = adj[u] | {z}
    adj[v] = adj[v] | {z}
    aug = Graph(g.n + 1, tuple(adj))
    res = find_hamilton_cycle(aug, budget)
    if not res.found:
        return OracleResult(res.status, expansions=res.expansions, reason=res.reason)
    seq = res.sequence
    i = seq.index(z)
    seq = seq[i + 1 :] + seq[:i]
    if seq[0] != u:
        seq.reverse()
    assert check_sequence(g, seq, closed=False) is None and seq[0] == u and seq[-1] == v
    return OracleResult(FOUND, seq, res.expansions)


def parity_gap(t: int, l: int) -> int:
    """Alternating binomial row sum ``sum_{i<=l} (-1)^i C(t, i)``."""
    if not 0 <= l <= t:
        raise ValueError("need 0 <= l <= t")
    return sum((-1) ** i * math.comb(t, i) for i in range(l + 1))


__all__ = [
    "FOUND",
    "ABSENT",
    "INCONCLUSIVE",
    "OracleResult",
    "check_sequence",
    "find_hamilton_cycle",
    "find_hamilton_path",
    "parity_gap",
    "articulation_points",
    "is_connected",
    "bipartition",
]
