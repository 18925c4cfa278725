"""Serialisation: graph input JSON, and JSON / DOT / graycode-text output.

graycode-text lists one partition per line (cells ascending by minimum, joined
by ``|``, members comma-separated) followed by a ``CYCLE`` or ``PATH`` line.
An empty sequence serialises to the empty string.
"""

from __future__ import annotations

import json
from typing import Sequence

from .colour_graphs import ColourGraph
from .constructions.decorated import CYCLE, PATH, DecoratedCycle
from .graphs import Graph, GraphError
from .partitions import LABELED, format_partition, parse_partition

FORMATS = ("json", "dot", "graycode-text")


def load_graph(data: dict | str) -> Graph:
    """Graph from ``{"n": int, "edges": [[u, v], ...], "labels": [...]?}``."""
    if isinstance(data, str):
        data = json.loads(data)
    if not isinstance(data, dict) or "n" not in data:
        raise GraphError("graph JSON needs an object with key 'n'")
    n = data["n"]
    if not isinstance(n, int) or n < 0:
        raise GraphError("'n' must be a non-negative integer")
    edges = data.get("edges", [])
    for e in edges:
        if not (isinstance(e, (list, tuple)) and len(e) == 2 and all(isinstance(v, int) for v in e)):
            raise GraphError(f"bad edge {e!r}")
    return Graph.from_edges(n, edges, data.get("labels"))


def graph_to_dict(g: Graph) -> dict:
    out = {"n": g.n, "edges": [list(e) for e in g.edges()]}
    if g.labels:
        out["labels"] = list(g.labels)
    return out


def _item_text(item, kind: str) -> str:
    if kind == LABELED:
        return ",".join(map(str, item))
    return format_partition(item)


def graycode_text(items: Sequence, kind: str = CYCLE) -> str:
    if kind not in (CYCLE, PATH):
        raise ValueError(f"unknown sequence kind {kind!r}")
    if not items:
        return ""
    lines = [format_partition(p) for p in items]
    return "\n".join(lines + [kind.upper()]) + "\n"


def parse_graycode(text: str) -> tuple[list, str]:
    """Inverse of :func:`graycode_text`: ``(partitions, kind)``."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        return [], PATH
    marker = lines[-1]
    if marker not in ("CYCLE", "PATH"):
        raise ValueError("graycode-text must end with CYCLE or PATH")
    return [parse_partition(ln) for ln in lines[:-1]], marker.lower()


def _dot_colour_graph(cg: ColourGraph, highlight=()) -> str:
    chosen = {tuple(sorted(e)) for e in highlight}
    lines = [f"graph {cg.kind}_{cg.k} {{"]
    for i, item in enumerate(cg.members):
        lines.append(f'  {i} [label="{_item_text(item, cg.kind)}"];')
    for u, v in cg.skeleton.edges():
        style = " [penwidth=3]" if (u, v) in chosen else ""
        lines.append(f"  {u} -- {v}{style};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _cycle_edges(cert: DecoratedCycle):
    order = cert.order
    pairs = list(zip(order, order[1:]))
    if cert.kind == CYCLE and len(order) > 2:
        pairs.append((order[-1], order[0]))
    return pairs


def _json_colour_graph(cg: ColourGraph) -> dict:
    return {
        "graph": graph_to_dict(cg.base),
        "k": cg.k,
        "kind": cg.kind,
        "vertices": [_item_text(p, cg.kind) for p in cg.members],
        "edges": [list(e) for e in cg.skeleton.edges()],
    }


def export(obj: ColourGraph | DecoratedCycle, fmt: str) -> bytes:
    """Deterministic byte serialisation of a colour graph or a certificate."""
    if fmt not in FORMATS:
        raise ValueError(f"unsupported format {fmt!r}; choose from {', '.join(FORMATS)}")
    if isinstance(obj, DecoratedCycle):
        cg = obj.colour_graph
        if fmt == "graycode-text":
            text = graycode_text(obj.partitions(), obj.kind)
        elif fmt == "dot":
            text = _dot_colour_graph(cg, _cycle_edges(obj))
        else:
            doc = {
                "colour_graph": {"graph": graph_to_dict(cg.base), "k": cg.k, "kind": cg.kind, "order": len(cg)},
                "kind": obj.kind,
                "sequence": [_item_text(p, cg.kind) for p in obj.partitions()],
                "leaf": obj.leaf,
                "singleton": obj.singleton,
                "anchors": {k: _jsonable(v) for k, v in sorted(obj.anchors.items())},
                "diagnostics": _jsonable(obj.diagnostics),
            }
            text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    elif isinstance(obj, ColourGraph):
        if fmt == "graycode-text":
            raise ValueError("graycode-text needs a cycle or path, not a bare colour graph")
        if fmt == "dot":
            text = _dot_colour_graph(obj)
        else:
            text = json.dumps(_json_colour_graph(obj), indent=2, sort_keys=True) + "\n"
    else:
        raise TypeError(f"cannot export {type(obj).__name__}")
    return text.encode()


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        seq = sorted(x) if isinstance(x, (set, frozenset)) else x
        return [_jsonable(v) for v in seq]
    return x
