"""Reflected Gray codes, hypercube Hamilton paths and the star constructions."""

from __future__ import annotations

from ..colour_graphs import build
from ..graphs import star
from ..partitions import BELL, STIRLING, canonical
from .decorated import CYCLE, ConstructionError, certify

Bits = tuple[int, ...]


def gray_cycle(m: int) -> list[Bits]:
    """Reflected binary code on ``m >= 2`` bits, starting at all zeros."""
    if m < 2:
        raise ValueError("gray_cycle needs m >= 2")
    return [tuple(((i ^ (i >> 1)) >> (m - 1 - j)) & 1 for j in range(m)) for i in range(1 << m)]


def weight(x: Bits) -> int:
    return sum(x)


def hypercube_path(x: Bits, y: Bits) -> list[Bits]:
    """Hamilton path of ``Q_m`` from ``x`` to ``y`` (opposite weight parity)."""
    x, y = tuple(x), tuple(y)
    if len(x) != len(y):
        raise ValueError("sequences of different length")
    if weight(x) % 2 == weight(y) % 2:
        raise ValueError(f"{x} and {y} lie in the same cell of the bipartition")
    m = len(x)
    if m == 1:
        return [x, y]
    i = next(j for j in range(m) if x[j] != y[j])
    j = 0 if i != 0 else 1
    z = x[:j] + (1 - x[j],) + x[j + 1 :]

    def drop(s):
        return s[:i] + s[i + 1 :]

    def put(s, bit):
        return s[:i] + (bit,) + s[i:]

    first = [put(s, x[i]) for s in hypercube_path(drop(x), drop(z))]
    second = [put(s, y[i]) for s in hypercube_path(drop(z), drop(y))]
    return first + second


def flip(x: Bits, j: int) -> Bits:
    return x[:j] + (1 - x[j],) + x[j + 1 :]


def star_sequence_partition(bits: Bits, centre: int, ref: int, others: list[int]):
    """The star colouring encoded by ``bits``: bit ``i`` says ``others[i]`` is apart from ``ref``."""
    zero = [ref] + [v for v, b in zip(others, bits) if b == 0]
    one = [v for v, b in zip(others, bits) if b == 1]
    return canonical([[centre], zero, one])


def star_s3_sequences(n: int) -> list[Bits]:
    """Hamilton cycle of the sequence model of ``S_3(K_{1,n})`` for odd ``n``.

    Sequences have length ``n-1`` and at least one 1; neighbours differ in
    one entry or in every entry.
    """
    if n < 3 or n % 2 == 0:
        raise ValueError(f"S_3(K_1,{n}) is Hamiltonian only for odd n >= 3")
    length = n - 1
    if n == 3:
        return [(0, 1), (1, 1), (1, 0)]
    m = length - 2
    # 00-prefix block: the Gray cycle minus all-zeros is a path 0..01 -> 10..0;
    # swapping coordinates 0 and m-2 turns its far end into 0..010.
    inner = gray_cycle(m)[1:]
    swap = list(range(m))
    swap[0], swap[m - 2] = swap[m - 2], swap[0]
    inner = [tuple(s[swap[j]] for j in range(m)) for s in inner]
    block00 = [(0, 0) + s for s in inner]
    assert block00[0] == (0,) * (length - 1) + (1,) and block00[-1] == (0,) * (length - 2) + (1, 0)
    # 10/11 block: a Q_{n-2} path 100..001 -> 111..101
    start = (1,) + (0,) * (length - 2) + (1,)
    end = (1,) * (length - 2) + (0, 1)
    tail = hypercube_path(start[1:], end[1:])
    block1 = [(1,) + s for s in tail]
    cyc = block00 + block1[::-1]
    for i in range(len(cyc)):
        a, b = cyc[i], cyc[(i + 1) % len(cyc)]
        if a[:2] == (1, 1) and b[:2] == (1, 1):
            break
    else:
        raise ConstructionError("no consecutive 11-prefixed pair on the 10/11 path", n=n)
    # splice the 01 block between 11x and 11y
    middle = [(0, 1) + s for s in hypercube_path(a[2:], b[2:])]
    return cyc[: i + 1] + middle + cyc[i + 1 :]


def star_s3_cycle(n: int):
    """Validated Hamilton cycle of ``S_3(K_{1,n})``, ``n`` odd."""
    if n % 2 == 0:
        raise ValueError(f"S_3(K_1,{n}) is bipartite of odd order for even n; no Hamilton cycle")
    g = star(n)
    cg = build(g, 3, STIRLING)
    others = list(range(2, n + 1))
    items = [star_sequence_partition(s, 0, 1, others) for s in star_s3_sequences(n)]
    return certify(cg, items, CYCLE)


def star_b3_items(centre: int, leaves: list[int], forbidden: int | None):
    """``B_3`` cycle of a star as partitions, starting at the 2-colouring.

    The reference leaf (never a neighbour-anchor of the 2-colouring) is the
    forbidden vertex when that is a leaf; the anchors are then two other leaves.
    """
    leaves = sorted(leaves)
    if len(leaves) < 2:
        raise ValueError("star needs at least two leaves")
    ref = forbidden if forbidden in leaves else leaves[0]
    others = [v for v in leaves if v != ref]
    return [star_sequence_partition(s, centre, ref, others) for s in gray_cycle(len(others))]


def star_b3_cycle(n: int, forbidden: int | None = None):
    """Hamilton cycle of ``B_3(K_{1,n})`` whose 2-colouring neighbours avoid ``forbidden``."""
    if n < 3:
        raise ValueError("star_b3_cycle needs n >= 3")
    g = star(n)
    items = star_b3_items(0, list(range(1, n + 1)), forbidden)
    anchors = {"a": _lone(items[1], 0), "b": _lone(items[-1], 0)}
    return certify(build(g, 3, BELL), items, CYCLE, anchors=anchors)


def _lone(p, centre):
    return next(c[0] for c in p if len(c) == 1 and c[0] != centre)
