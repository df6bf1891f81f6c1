"""Isolating sets and isolating partitions of small graphs."""

from .clique_partition import partition_k_clique
from .cycle_partition import partition_cycle
from .errors import HypothesisError, ProofGapReport, SearchAborted
from .exact import (
    clique_isomatic_k_partition,
    cycle_isomatic_3_partition,
    max_isomatic,
    min_isolating,
)
from .formats import emit_graph6, parse_graph6
from .graph import Graph
from .verify import Certificate, Coloring, Target, is_isolating, verify_partition

__all__ = [
    "Certificate",
    "Coloring",
    "Graph",
    "HypothesisError",
    "ProofGapReport",
    "SearchAborted",
    "Target",
    "clique_isomatic_k_partition",
    "cycle_isomatic_3_partition",
    "emit_graph6",
    "is_isolating",
    "max_isomatic",
    "min_isolating",
    "parse_graph6",
    "partition_cycle",
    "partition_k_clique",
    "verify_partition",
]
