"""Hamilton cycles of ``B_n(G)`` for every graph other than ``K_n`` and ``K_n - e``."""

from __future__ import annotations

import itertools

from ..colour_graphs import build
from ..graphs import Graph
from ..partitions import BELL, canonical, iter_partitions
from .decorated import CYCLE, ConstructionError, certify
from .rook import rook_plus_path


class _Block:
    """Extensions of one colouring ``c`` of ``G - x - y`` laid out as a rook-plus graph.

    Row ``a`` fixes the cell of ``x`` (0 = new cell), column ``b`` the cell of ``y``;
    ``(0, 0)`` is ``c(x|y)`` and the clone is ``c(xy)``.
    """

    def __init__(self, g: Graph, c, x: int, y: int):
        self.c, self.x, self.y = c, x, y
        self.xopt = [None] + [i for i, cell in enumerate(c) if not any(g.has_edge(x, v) for v in cell)]
        self.yopt = [None] + [i for i, cell in enumerate(c) if not any(g.has_edge(y, v) for v in cell)]
        self.r, self.s = len(self.xopt), len(self.yopt)
        self.clone_id = self.r * self.s

    def item(self, vid: int):
        if vid == self.clone_id:
            return canonical(list(self.c) + [[self.x, self.y]])
        a, b = divmod(vid, self.s)
        cells = [list(cell) for cell in self.c]
        extra = []
        for v, opt in ((self.x, self.xopt[a]), (self.y, self.yopt[b])):
            if opt is None:
                extra.append([v])
            else:
                cells[opt].append(v)
        return canonical(cells + extra)

    @property
    def clone(self):
        return self.item(self.clone_id)

    @property
    def base(self):
        return self.item(0)

    def path_from_clone(self, target_item) -> list:
        """Hamilton path of the block from ``c(xy)`` to ``target_item``."""
        tid = self._id_of(target_item)
        return [self.item(v) for v in rook_plus_path(self.r, self.s, tid)]

    def path_from_base(self, target_item) -> list:
        """The same path with the twins ``c(xy)`` and ``c(x|y)`` exchanged."""
        clone, base = self.clone, self.base
        swap = {clone: base, base: clone}
        return [swap.get(p, p) for p in self.path_from_clone(target_item)]

    def extension(self, x_cell_of=None, y_cell_of=None):
        """Extension with ``x``/``y`` joining the cell containing the given vertex (None: new)."""
        a = 0 if x_cell_of is None else self.xopt.index(self._cell_index(x_cell_of))
        b = 0 if y_cell_of is None else self.yopt.index(self._cell_index(y_cell_of))
        return self.item(a * self.s + b)

    def allows(self, who: int, vertex: int) -> bool:
        opts = self.xopt if who == self.x else self.yopt
        return self._cell_index(vertex) in opts

    def _cell_index(self, v):
        return next(i for i, cell in enumerate(self.c) if v in cell)

    def _id_of(self, item):
        for vid in range(self.clone_id + 1):
            if self.item(vid) == item:
                return vid
        raise KeyError(item)

    def __len__(self):
        return self.clone_id + 1


def _missing_edges(g: Graph, verts) -> list:
    return [(u, v) for u, v in itertools.combinations(sorted(verts), 2) if not g.has_edge(u, v)]


def _ladder(blocks) -> list:
    """Even ladder: ``P_1``, then alternate block ends along the recursive cycle."""
    out = []
    for i, blk in enumerate(blocks):
        path = blk.path_from_clone(blk.base)
        out += path if i % 2 == 0 else path[::-1]
    return out


def _odd_cycle(g: Graph, rest, x, y, cyc):
    """Odd recursive cycle with ``cyc[0]`` the all-singletons colouring of ``rest``."""
    blocks = [_Block(g, c, x, y) for c in cyc]
    if all(len(b) == 2 for b in blocks):
        return [b.clone for b in blocks] + [b.base for b in blocks[::-1]], "two-column"
    (pair,) = [cell for cell in cyc[1] if len(cell) == 2]
    z1, z2 = pair
    b1, b2 = blocks[0], blocks[1]
    attempts = []
    for who in (x, y):
        for v in sorted(rest):
            if v not in pair and b1.allows(who, v):
                attempts.append(("reroute-v", who, v))
    for who in (x, y):
        if b1.allows(who, z1) and b2.allows(who, z1):
            attempts.append(("reroute-z", who, z1))
    for label, who, v in attempts:
        if who == x:
            w1, w2 = b1.extension(x_cell_of=v), b2.extension(x_cell_of=v)
        else:
            w1, w2 = b1.extension(y_cell_of=v), b2.extension(y_cell_of=v)
        out = b1.path_from_clone(w1) + b2.path_from_base(w2)[::-1]
        for i in range(2, len(blocks)):
            path = blocks[i].path_from_clone(blocks[i].base)
            # blocks with even 1-based index are entered at c(x|y)
            out += path[::-1] if i % 2 == 0 else path
        return out, label
    return None, None


def _bell_items(g: Graph, verts: frozenset, memo: dict, notes: list):
    if verts in memo:
        return memo[verts]
    missing = _missing_edges(g, verts)
    if len(missing) <= 1:
        raise ConstructionError("complete or complete minus an edge", verts=sorted(verts))
    failures = []
    for x, y in missing:
        rest = frozenset(verts - {x, y})
        rest_missing = _missing_edges(g, rest)
        if not rest_missing:
            (c,) = list(iter_partitions(g, len(rest), False, rest))
            blk = _Block(g, c, x, y)
            items = blk.path_from_clone(blk.base)
            memo[verts] = items
            return items
        if len(rest_missing) == 1:
            u, v = rest_missing[0]
            cs = list(iter_partitions(g, len(rest), False, rest))
            c1 = next(c for c in cs if any(u in cell and v in cell for cell in c))
            c2 = next(c for c in cs if c != c1)
            blk1, blk2 = _Block(g, c1, x, y), _Block(g, c2, x, y)
            items = blk1.path_from_clone(blk1.base) + blk2.path_from_clone(blk2.base)[::-1]
            memo[verts] = items
            return items
        cyc = _bell_items(g, rest, memo, notes)
        if len(cyc) % 2 == 0:
            items = _ladder([_Block(g, c, x, y) for c in cyc])
            memo[verts] = items
            return items
        singles = tuple((v,) for v in sorted(rest))
        for direction in (1, -1):
            seq = cyc if direction == 1 else cyc[::-1]
            i = seq.index(singles)
            seq = seq[i:] + seq[:i]
            items, label = _odd_cycle(g, rest, x, y, seq)
            if items is not None:
                if failures or direction == -1:
                    notes.append({"verts": sorted(verts), "pair": (x, y), "direction": direction, "case": label, "skipped_pairs": list(failures)})
                memo[verts] = items
                return items
        failures.append((x, y))
    raise ConstructionError("no odd-case reroute applies for any non-adjacent pair", verts=sorted(verts), pairs=failures)


def bell_n_cycle(g: Graph):
    """Validated Hamilton cycle of ``B_n(g)``; ``g`` must not be ``K_n`` or ``K_n - e``."""
    if g.n < 2:
        raise ValueError("bell_n_cycle needs n >= 2")
    if len(_missing_edges(g, range(g.n))) <= 1:
        raise ValueError("B_n(K_n) and B_n(K_n - e) have at most two vertices; no Hamilton cycle")
    notes: list = []
    items = _bell_items(g, frozenset(range(g.n)), {}, notes)
    return certify(build(g, g.n, BELL), items, CYCLE, diagnostics=notes)
