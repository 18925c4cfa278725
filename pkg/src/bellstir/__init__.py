"""Bell, Stirling and k-colour graphs of a graph, with constructive Gray codes.

The partitions of a graph's vertex set into independent sets form a
reconfiguration graph; this package enumerates it, builds Hamilton cycles
by explicit constructions and checks every certificate against brute force.
"""

from .colour_graphs import (
    Bijection,
    ColourGraph,
    bell_graph,
    build,
    join_product_bijection,
    stirling_graph,
    stirling_top_bijection,
    unique_colouring_bijection,
)
from .graphs import Graph, GraphError, Tree
from .oracle import OracleResult, check_sequence, find_hamilton_cycle, find_hamilton_path, parity_gap
from .partitions import (
    BELL,
    LABELED,
    STIRLING,
    PartitionFamily,
    adjacent,
    bell_number_of,
    canonical,
    chromatic_number,
    enumerate_family,
    restrict,
    stirling_number_of,
)

__version__ = "0.1.0"

__all__ = [
    "BELL",
    "LABELED",
    "STIRLING",
    "Bijection",
    "ColourGraph",
    "Graph",
    "GraphError",
    "OracleResult",
    "PartitionFamily",
    "Tree",
    "adjacent",
    "bell_graph",
    "bell_number_of",
    "build",
    "canonical",
    "check_sequence",
    "chromatic_number",
    "enumerate_family",
    "find_hamilton_cycle",
    "find_hamilton_path",
    "join_product_bijection",
    "parity_gap",
    "restrict",
    "stirling_graph",
    "stirling_number_of",
    "stirling_top_bijection",
    "unique_colouring_bijection",
]
