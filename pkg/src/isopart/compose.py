"""Gluing a colouring of ``G[S]`` to a colouring of ``G - S``."""

from __future__ import annotations

from .graph import Graph, bits, closed_neighborhood, component_masks, induced_subgraph, popcount
from .verify import Coloring, Target, verify_partition


class CompositionError(ValueError):
    """The side condition that makes the union valid does not hold."""

    def __init__(self, message: str, class_index: int, component: list[int]):
        super().__init__(message)
        self.class_index = class_index
        self.component = component


def boundary_edges(g: Graph, part: int, outside: int) -> int:
    return sum(popcount(g.adj[v] & outside) for v in bits(part))


def compose(
    g: Graph,
    s: int,
    c_s: Coloring,
    c_rest: Coloring,
    target: Target,
    max_join: int,
) -> Coloring:
    """Union of the two colourings after checking the gluing side condition.

    ``c_s`` colours ``G[S]`` and ``c_rest`` colours ``G - S``, both indexed by
    increasing original vertex. ``c_s`` must itself be valid on ``G[S]`` and,
    for each of its classes ``D``, every component of ``G[S] - N[D]`` may send
    at most ``max_join`` edges out of ``S``.
    """
    if c_s.m != c_rest.m:
        raise ValueError("colourings use different numbers of classes")
    outside = g.full & ~s
    sub, index = induced_subgraph(g, s)
    cert = verify_partition(sub, c_s, target)
    if not cert.passed:
        raise CompositionError(
            "colouring of G[S] is not valid on its own",
            cert.class_index,
            index.lift_list(cert.witness),
        )
    for i, d in enumerate(c_s.classes(), start=1):
        alive = sub.full & ~closed_neighborhood(sub, d)
        for comp in component_masks(sub.adj, alive):
            orig = index.lift(comp)
            joins = boundary_edges(g, orig, outside)
            if joins > max_join:
                raise CompositionError(
                    f"class {i}: residual component joins G-S by {joins} > {max_join} edges",
                    i,
                    list(bits(orig)),
                )
    colors = [0] * g.n
    for local, v in enumerate(bits(s)):
        colors[v] = c_s.colors[local]
    for local, v in enumerate(bits(outside)):
        colors[v] = c_rest.colors[local]
    return Coloring(tuple(colors), c_s.m)
