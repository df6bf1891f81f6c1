"""Planarity test: Euler edge bound first, then a full embedding test."""

from __future__ import annotations

import networkx as nx

from .graph import Graph


def to_networkx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def is_planar(g: Graph) -> bool:
    # a simple planar graph on n >= 3 vertices has at most 3n - 6 edges
    if g.n >= 3 and g.num_edges() > 3 * g.n - 6:
        return False
    if g.n <= 4:
        return True
    planar, _ = nx.check_planarity(to_networkx(g))
    return planar
