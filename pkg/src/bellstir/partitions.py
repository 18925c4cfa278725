"""Colourings viewed as partitions into independent sets.

A partition is a tuple of cells; each cell is a sorted tuple of vertex ids and
the cells are ordered by their minimum element.  That canonical form makes
partition equality plain tuple equality.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .graphs import Graph

Partition = tuple[tuple[int, ...], ...]
Colouring = tuple[int, ...]

BELL = "bell"
STIRLING = "stirling"
LABELED = "labeled"
MODES = (BELL, STIRLING, LABELED)

DEFAULT_CAP = 10**7


class EnumerationCapExceeded(RuntimeError):
    pass


def canonical(cells: Iterable[Iterable[int]]) -> Partition:
    out = [tuple(sorted(c)) for c in cells]
    out = [c for c in out if c]
    out.sort(key=lambda c: c[0])
    return tuple(out)


def ground_set(p: Partition) -> frozenset[int]:
    return frozenset(v for c in p for v in c)


def is_valid_partition(g: Graph, p: Partition, verts: Iterable[int] | None = None) -> bool:
    verts = frozenset(range(g.n)) if verts is None else frozenset(verts)
    seen: set[int] = set()
    for c in p:
        if not c:
            return False
        for v in c:
            if v in seen:
                return False
            seen.add(v)
            if any(u in g.adj[v] for u in c):
                return False
    return seen == verts and p == canonical(p)


def restrict(p: Partition, x: int) -> Partition:
    out = []
    for c in p:
        if x in c:
            c = tuple(v for v in c if v != x)
            if not c:
                continue
        out.append(c)
    # removing the minimum of a cell can change the cell order
    out.sort(key=lambda c: c[0])
    return tuple(out)


def cell_map(p: Partition) -> dict[int, tuple[int, ...]]:
    return {v: c for c in p for v in c}


def adjacent(p: Partition, q: Partition) -> bool:
    """True iff some vertex ``x`` has ``restrict(p, x) == restrict(q, x)``."""
    if p == q:
        raise ValueError("adjacency is irreflexive: p == q")
    mp, mq = cell_map(p), cell_map(q)
    if mp.keys() != mq.keys():
        raise ValueError("partitions over different ground sets")
    return _adjacent_maps(p, q, mp, mq)


def _adjacent_maps(p, q, mp, mq) -> bool:
    return _differ_by_one_move(p, q)


def _differ_by_one_move(p, q) -> bool:
    # only cells that differ can hold the moved vertex; at most two per side
    sp, sq = set(p), set(q)
    dp, dq = sp - sq, sq - sp
    if len(dp) > 2 or len(dq) > 2:
        return False
    for x in {v for c in dp for v in c}:
        a = {c for c in (tuple(v for v in c if v != x) for c in dp) if c}
        b = {c for c in (tuple(v for v in c if v != x) for c in dq) if c}
        if a == b:
            return True
    return False


def adjacent_brute(p: Partition, q: Partition) -> bool:
    if p == q:
        raise ValueError("adjacency is irreflexive: p == q")
    verts = ground_set(p)
    if verts != ground_set(q):
        raise ValueError("partitions over different ground sets")
    return any(restrict(p, x) == restrict(q, x) for x in verts)


def quick_adjacent(p: Partition, q: Partition) -> bool:
    """Unchecked adjacency for internal use; ``p != q`` over one ground set."""
    return p != q and _differ_by_one_move(p, q)


def colourings_adjacent(c: Colouring, d: Colouring) -> bool:
    return sum(a != b for a, b in zip(c, d)) == 1


def colouring_to_partition(c: Colouring, verts: Sequence[int] | None = None) -> Partition:
    verts = range(len(c)) if verts is None else verts
    groups: dict[int, list[int]] = {}
    for v, col in zip(verts, c):
        groups.setdefault(col, []).append(v)
    return canonical(groups.values())


@dataclass(frozen=True)
class PartitionFamily:
    graph: Graph
    k: int
    mode: str
    members: tuple

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __getitem__(self, i):
        return self.members[i]


def iter_partitions(g: Graph, k: int, exact: bool, verts: Sequence[int] | None = None):
    """Restricted-growth enumeration pruned by independence (partitions of ``verts``)."""
    verts = list(range(g.n)) if verts is None else sorted(verts)
    n = len(verts)
    cells: list[list[int]] = []

    def rec(i):
        if i == n:
            if not exact or len(cells) == k:
                yield tuple(tuple(c) for c in cells)
            return
        if exact and len(cells) + (n - i) < k:
            return
        v = verts[i]
        nb = g.adj[v]
        for c in cells:
            if not any(u in nb for u in c):
                c.append(v)
                yield from rec(i + 1)
                c.pop()
        if len(cells) < k:
            cells.append([v])
            yield from rec(i + 1)
            cells.pop()

    yield from rec(0)


def iter_colourings(g: Graph, k: int):
    col = [0] * g.n

    def rec(v):
        if v == g.n:
            yield tuple(col)
            return
        used = {col[u] for u in g.adj[v] if u < v}
        for c in range(1, k + 1):
            if c not in used:
                col[v] = c
                yield from rec(v + 1)

    yield from rec(0)


def enumerate_family(g: Graph, k: int, mode: str = BELL, cap: int = DEFAULT_CAP) -> PartitionFamily:
    if k < 1:
        raise ValueError("k must be positive")
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    if mode == LABELED:
        source = iter_colourings(g, k)
    else:
        source = iter_partitions(g, k, exact=(mode == STIRLING))
    members = []
    for item in source:
        members.append(item)
        if len(members) > cap:
            raise EnumerationCapExceeded(f"more than {cap} members for n={g.n}, k={k}, mode={mode}")
    members.sort()
    return PartitionFamily(g, k, mode, tuple(members))


def bell_number_of(g: Graph, k: int, cap: int = DEFAULT_CAP) -> int:
    return len(enumerate_family(g, k, BELL, cap))


def stirling_number_of(g: Graph, k: int, cap: int = DEFAULT_CAP) -> int:
    if g.n == 0:
        return 0
    return len(enumerate_family(g, k, STIRLING, cap))


def chromatic_number(g: Graph) -> int:
    if g.n == 0:
        return 0
    for k in range(1, g.n + 1):
        if next(iter_partitions(g, k, exact=True), None) is not None:
            return k
    raise AssertionError("unreachable: n colours always suffice")


def classical_stirling2(n: int, k: int) -> int:
    return sum((-1) ** j * math.comb(k, j) * (k - j) ** n for j in range(k + 1)) // math.factorial(k)


def classical_bell(n: int, k: int) -> int:
    return sum(classical_stirling2(n, j) for j in range(0, k + 1))


def set_partitions_brute(items: Sequence[int]) -> list[Partition]:
    """Every set partition of ``items`` by brute-force block assignment (oracle)."""
    items = list(items)
    out = set()
    for labels in itertools.product(range(len(items)), repeat=len(items)):
        groups: dict[int, list[int]] = {}
        for v, lab in zip(items, labels):
            groups.setdefault(lab, []).append(v)
        out.add(canonical(groups.values()))
    return sorted(out)


def format_partition(p: Partition, labels: Sequence[str] | None = None) -> str:
    name = (lambda v: labels[v]) if labels else str
    return "|".join(",".join(name(v) for v in c) for c in p)


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if not text:
        return ()
    return canonical([int(v) for v in cell.split(",")] for cell in text.split("|"))
