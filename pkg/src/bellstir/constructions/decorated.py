from __future__ import annotations

from dataclasses import dataclass, field

from ..colour_graphs import ColourGraph
from ..oracle import check_sequence

CYCLE = "cycle"
PATH = "path"


class CertificateError(AssertionError):
    def __init__(self, message, witness=None, context=None):
        super().__init__(f"{message}: {witness}" if witness is not None else message)
        self.witness = witness
        self.context = context or {}


class ConstructionError(RuntimeError):
    """A construction could not realise a step it is supposed to guarantee."""

    def __init__(self, message, **context):
        super().__init__(message)
        self.context = context


@dataclass
class DecoratedCycle:
    """A validated Hamilton cycle or path of a colour graph.

    ``singleton[i]`` records whether ``leaf`` forms its own cell at position
    ``i`` (the spliced path part of the tree constructions).
    """

    colour_graph: ColourGraph
    order: list[int]
    kind: str
    leaf: int | None = None
    singleton: list[bool] | None = None
    anchors: dict = field(default_factory=dict)
    diagnostics: list = field(default_factory=list)

    def partitions(self) -> list:
        return [self.colour_graph.members[i] for i in self.order]

    def __len__(self):
        return len(self.order)


def certify(cg: ColourGraph, items, kind: str = CYCLE, leaf=None, **extra) -> DecoratedCycle:
    """Map partitions to vertex ids and run the shared validator; raise on failure."""
    order = []
    for p in items:
        if p not in cg.index:
            raise CertificateError("item is not a vertex of the colour graph", p)
        order.append(cg.index[p])
    if kind == CYCLE and len(order) < 3:
        raise CertificateError("cycle shorter than 3", len(order))
    witness = check_sequence(cg.skeleton, order, closed=(kind == CYCLE))
    if witness is not None:
        named = tuple(cg.members[w] if isinstance(w, int) and 0 <= w < len(cg) else w for w in witness[1:])
        raise CertificateError(f"invalid Hamilton {kind}", (witness[0],) + named)
    singleton = None
    if leaf is not None:
        singleton = [(leaf,) in p for p in items]
    return DecoratedCycle(cg, order, kind, leaf, singleton, **extra)


def rotate_to(seq: list, item) -> list:
    i = seq.index(item)
    return seq[i:] + seq[:i]


def singleton_arc_is_contiguous(flags: list[bool]) -> bool:
    """True when the ``True`` positions form one arc of the cyclic order."""
    if not any(flags) or all(flags):
        return True
    changes = sum(flags[i] != flags[i - 1] for i in range(len(flags)))
    return changes == 2
