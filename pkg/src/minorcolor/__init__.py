"""Defective colouring of graphs with no K_{t+1} minor.

A graph without a K_{t+1} minor splits into t parts, each inducing a
subgraph of maximum degree below an explicit bound s(t). The package peels
the graph down by low-degree vertices and edges, then replays the peel to
build the parts. It also ships the graphs showing t-1 parts do not suffice,
and exhaustive oracles for small inputs.
"""

__version__ = "0.1.0"

from .engine import (  # noqa: E402
    Coloring,
    Params,
    Partition,
    Stuck,
    compute_r,
    compute_s,
    defective_coloring,
    find_reduction,
    reduce,
    replay,
    verify_partition,
)
from .graph import Graph, construct_sharp, format_edge_list, parse_edge_list  # noqa: E402
from .oracle import has_clique_minor, min_defect  # noqa: E402

__all__ = [
    "Coloring",
    "Graph",
    "Params",
    "Partition",
    "Stuck",
    "compute_r",
    "compute_s",
    "construct_sharp",
    "defective_coloring",
    "find_reduction",
    "format_edge_list",
    "has_clique_minor",
    "min_defect",
    "parse_edge_list",
    "reduce",
    "replay",
    "verify_partition",
]
