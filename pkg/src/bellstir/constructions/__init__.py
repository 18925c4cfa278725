"""Constructive Hamilton cycles and paths, each returned as a validated certificate."""

from .base import dominating_circuit, line_graph_cycle, stirling_base_cycle, stirling_base_items
from .bell import bell_n_cycle
from .cgraph import CGraphDecomposition, c_graph_cycle_through_edge, disjoint_edges
from .cube import gray_cycle, hypercube_path, star_b3_cycle, star_s3_cycle
from .decorated import (
    CYCLE,
    PATH,
    CertificateError,
    ConstructionError,
    DecoratedCycle,
    certify,
    singleton_arc_is_contiguous,
)
from .rook import rook_path, rook_plus_path
from .trees import (
    b3_tree_cycle,
    readings,
    s3_path_with_endpoints,
    s3_tree_ham_path,
    s4_tree_cycle,
    sk_tree_cycle,
)

__all__ = [
    "CYCLE",
    "PATH",
    "CGraphDecomposition",
    "CertificateError",
    "ConstructionError",
    "DecoratedCycle",
    "b3_tree_cycle",
    "bell_n_cycle",
    "c_graph_cycle_through_edge",
    "certify",
    "disjoint_edges",
    "dominating_circuit",
    "gray_cycle",
    "hypercube_path",
    "line_graph_cycle",
    "readings",
    "rook_path",
    "rook_plus_path",
    "s3_path_with_endpoints",
    "s3_tree_ham_path",
    "s4_tree_cycle",
    "singleton_arc_is_contiguous",
    "sk_tree_cycle",
    "star_b3_cycle",
    "star_s3_cycle",
    "stirling_base_cycle",
    "stirling_base_items",
]
