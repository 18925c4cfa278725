"""Hamilton paths in rook's graphs ``K_r [] K_s`` and their cloned-vertex variant.

Vertex ``(row, col)`` has id ``row * s + col``; the clone of ``(0, 0)`` is ``r * s``.
"""

from __future__ import annotations

Cell = tuple[int, int]

# K_2 [] K_2 plus a clone of (0, 0): one path from the clone per target
_TWO_BY_TWO = {
    0: [4, 1, 3, 2, 0],
    1: [4, 0, 2, 3, 1],
    2: [4, 0, 1, 3, 2],
    3: [4, 1, 0, 2, 3],
}


def _row_walk(row: int, entry: int, exit_: int, cols) -> list[Cell]:
    middle = [c for c in cols if c not in (entry, exit_)]
    if entry == exit_:
        return [(row, entry)]
    return [(row, entry)] + [(row, c) for c in middle] + [(row, exit_)]


def _snake(rows: list[int], entry: int, last_exit: int | None, s: int, avoid_last=()) -> list[Cell] | None:
    """Row by row through ``rows``; each row entered and left in different columns.

    ``last_exit`` fixes where the final row ends (None: choose a column not in
    ``avoid_last``).  Returns None when no choice of exits works.
    """
    cols = range(s)
    out: list[Cell] = []
    for pos, row in enumerate(rows):
        last = pos == len(rows) - 1
        if last:
            if last_exit is not None:
                if last_exit == entry and s > 1:
                    return None
                exit_ = last_exit
            else:
                options = [c for c in cols if c != entry and c not in avoid_last]
                if not options:
                    return None
                exit_ = options[0]
        else:
            nxt_last = pos == len(rows) - 2
            banned = {entry}
            if nxt_last and last_exit is not None:
                banned.add(last_exit)
            options = [c for c in cols if c not in banned]
            if nxt_last and last_exit is None:
                # the final row needs an exit outside avoid_last and its entry
                good = [c for c in options if len([d for d in cols if d != c and d not in avoid_last]) > 0]
                options = good
            if not options:
                return None
            exit_ = options[0]
        out += _row_walk(row, entry, exit_, cols)
        entry = exit_
    return out


def rook_path(r: int, s: int, u: Cell, t: Cell) -> list[Cell]:
    """Hamilton path of ``K_r [] K_s`` from ``u`` to ``t``; r, s >= 2, not both 2."""
    if u == t:
        raise ValueError("endpoints must differ")
    if r == 1 or s == 1:
        if r == 1:
            return [(0, u[1])] + [(0, c) for c in range(s) if c not in (u[1], t[1])] + [(0, t[1])]
        return [(u[0], 0)] + [(a, 0) for a in range(r) if a not in (u[0], t[0])] + [(t[0], 0)]
    for transpose in (False, True):
        if transpose:
            rr, ss, uu, tt = s, r, (u[1], u[0]), (t[1], t[0])
        else:
            rr, ss, uu, tt = r, s, u, t
        found = _rook_path_rows(rr, ss, uu, tt)
        if found is not None:
            return [(b, a) for a, b in found] if transpose else found
    raise ValueError(f"no rook routing for r={r}, s={s}, {u} -> {t}")


def _rook_path_rows(r, s, u, t):
    if u[0] != t[0]:
        middle = [a for a in range(r) if a not in (u[0], t[0])]
        if s < 3 and r > 2:
            return None
        return _snake([u[0]] + middle + [t[0]], u[1], t[1], s)
    # same row: drop into the other rows, snake them, come back and finish the row
    if s < 3:
        return None
    row, b1, b2 = u[0], u[1], t[1]
    others = [a for a in range(r) if a != row]
    body = _snake_free(others, b1, s, avoid=(b1, b2))
    if body is None:
        return None
    c = body[-1][1]
    rest = [col for col in range(s) if col != b1]
    finish = _row_walk(row, c, b2, rest)
    return [u] + body + finish


def _snake_free(rows, entry, s, avoid):
    """Snake ``rows`` from column ``entry``; the last exit avoids ``avoid``."""
    cols = list(range(s))
    out = []
    for pos, row in enumerate(rows):
        if pos == len(rows) - 1:
            options = [c for c in cols if c != entry and c not in avoid]
        elif pos == len(rows) - 2:
            # leave so that the last row can still exit outside avoid
            options = [c for c in cols if c != entry and any(d != c and d not in avoid for d in cols)]
            options.sort(key=lambda c: (c not in avoid, c))
        else:
            options = [c for c in cols if c != entry]
        if not options:
            return None
        exit_ = options[0]
        out += _row_walk(row, entry, exit_, cols)
        entry = exit_
    return out


def rook_plus_path(r: int, s: int, target: int) -> list[int]:
    """Hamilton path of ``rook_plus(r, s)`` from the clone to ``target``."""
    clone = r * s
    if not 0 <= target < clone:
        raise ValueError(f"target {target} is not a non-clone vertex")
    if r == 1 or s == 1:
        return [clone] + [v for v in range(clone) if v != target] + [target]
    if r == 2 and s == 2:
        return list(_TWO_BY_TWO[target])
    goal = divmod(target, s)
    if target != 0:
        cells = rook_path(r, s, (0, 0), goal)
    else:
        cells = rook_path(r, s, (0, 1), (0, 0))
    return [clone] + [a * s + b for a, b in cells]
