"""(k+1)-colourings whose classes all isolate k-cliques, for connected graphs of maximum degree at most k.

The recursion mirrors the minimal-counterexample argument: find the first
structure in the fixed order below, colour it explicitly, colour the rest
recursively, glue. Every level is verified before it is returned.

    no k-clique -> non-separating k-clique -> non-induced K_k^+
        -> double k-clique -> induced K_k^+
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from .compose import CompositionError, compose
from .errors import HypothesisError, ProofGapReport
from .graph import (
    Graph,
    bits,
    component_masks,
    induced_subgraph,
    is_complete,
    is_connected,
    iter_cliques_in,
    lowest,
    popcount,
)
from .verify import Coloring, Target, is_isolating, verify_partition


class CliqueCase(enum.Enum):
    NO_CLIQUE = "no-clique"
    NON_SEPARATING = "non-separating-clique"
    NON_INDUCED_PLUS = "non-induced-clique-plus"
    DOUBLE = "double-clique"
    INDUCED_PLUS = "induced-clique-plus"


@dataclass(frozen=True)
class CliqueStructure:
    case: CliqueCase
    clique: int = 0
    # second clique of a double clique
    other: int = 0
    # pendant vertex of K_k^+ / bridge endpoint in ``clique``
    pendant: Optional[int] = None
    # pendant's neighbour in ``clique`` / bridge endpoint in ``other``
    attachment: Optional[int] = None


def check_hypotheses(g: Graph, k: int) -> None:
    if k < 3:
        raise HypothesisError("k", f"k must be at least 3, got {k}")
    if g.n == 0 or not is_connected(g):
        raise HypothesisError("connected", "input graph is not connected")
    if g.max_degree() > k:
        raise HypothesisError("max-degree", f"maximum degree {g.max_degree()} exceeds k={k}")
    if g.n == k and is_complete(g):
        raise HypothesisError("excluded-graph", f"excluded: K_{k}")


def classify_structure(g: Graph, k: int) -> CliqueStructure:
    check_hypotheses(g, k)
    return _classify(g, k)


def _classify(g: Graph, k: int) -> CliqueStructure:
    adj, full = g.adj, g.full
    cliques = list(iter_cliques_in(adj, full, k))
    if not cliques:
        return CliqueStructure(CliqueCase.NO_CLIQUE)
    for h in cliques:
        rest = full & ~h
        if rest and len(component_masks(adj, rest)) == 1:
            return CliqueStructure(CliqueCase.NON_SEPARATING, h)
    for h in cliques:
        for u in bits(full & ~h):
            if popcount(adj[u] & h) >= 2:
                return CliqueStructure(CliqueCase.NON_INDUCED_PLUS, h, pendant=u, attachment=lowest(adj[u] & h))
    for i, h1 in enumerate(cliques):
        for h2 in cliques[i + 1 :]:
            if h1 & h2:
                continue
            for a in bits(h1):
                if adj[a] & h2:
                    return CliqueStructure(CliqueCase.DOUBLE, h1, h2, pendant=a, attachment=lowest(adj[a] & h2))
    h = cliques[0]
    for u in bits(full & ~h):
        if adj[u] & h:
            return CliqueStructure(CliqueCase.INDUCED_PLUS, h, pendant=u, attachment=lowest(adj[u] & h))
    raise ProofGapReport("k-clique with no outside neighbour in a connected graph that is not K_k", g, k)


def two_clique_coloring(colors: list[int], h: int, u: int, h2: int, v: int, k: int) -> None:
    """Colour two k-cliques joined by ``uv`` (``u`` in ``h``, ``v`` in ``h2``) in place.

    ``u`` gets k+1, ``v`` gets k and the rest of each clique gets 1..k-1, so
    every class below k meets both cliques.
    """
    colors[u] = k + 1
    colors[v] = k
    for c, w in enumerate(bits(h & ~(1 << u)), start=1):
        colors[w] = c
    for c, w in enumerate(bits(h2 & ~(1 << v)), start=1):
        colors[w] = c


def _color_rest(g: Graph, rest: int, k: int, colors: list[int]) -> None:
    """Colour every component of ``G[rest]`` recursively, writing into ``colors``."""
    for comp in component_masks(g.adj, rest):
        sub, index = induced_subgraph(g, comp)
        if sub.n == k and is_complete(sub):
            raise ProofGapReport("a leftover component is K_k", g, k)
        part = _partition(sub, k)
        for local, c in enumerate(part.colors):
            colors[index.to_original[local]] = c


def _local(colors: list[int], mask: int, m: int) -> Coloring:
    return Coloring(tuple(colors[v] for v in bits(mask)), m)


def partition_k_clique(g: Graph, k: int) -> Coloring:
    """A (k+1)-colouring of ``g`` whose every class isolates all k-cliques.

    Raises HypothesisError when ``g`` is disconnected, has a vertex of degree
    above ``k`` or is K_k, and ProofGapReport if a step fails verification.
    """
    check_hypotheses(g, k)
    return _partition(g, k)


def _partition(g: Graph, k: int) -> Coloring:
    target = Target.clique(k)
    st = _classify(g, k)
    adj, full = g.adj, g.full
    colors = [0] * g.n

    if st.case is CliqueCase.NO_CLIQUE:
        return Coloring(tuple([1] * g.n), k + 1)

    if st.case is CliqueCase.NON_SEPARATING:
        h = st.clique
        rest = full & ~h
        u, v = next((a, lowest(adj[a] & rest)) for a in bits(h) if adj[a] & rest)
        sub, index = induced_subgraph(g, rest)
        if sub.n == k and is_complete(sub):
            two_clique_coloring(colors, h, u, rest, v, k)
            return _checked(g, k, Coloring(tuple(colors), k + 1), "two-clique colouring")
        part = _partition(sub, k)
        # permute colours so the attachment v carries k+1
        cv = part.colors[index.to_local[v]]
        swap = {cv: k + 1, k + 1: cv}
        for local, c in enumerate(part.colors):
            colors[index.to_original[local]] = swap.get(c, c)
        for c, w in enumerate(bits(h), start=1):
            colors[w] = c
        coloring = Coloring(tuple(colors), k + 1)
        cert = is_isolating(g, coloring.color_class(k + 1), target)
        if not cert.passed:
            survivors = [w for w in cert.witness if not h >> w & 1]
            inside = [w for w in cert.witness if h >> w & 1]
            if len(survivors) != 1 or len(inside) != k - 1 or u in inside:
                raise ProofGapReport(f"unexpected surviving clique {list(cert.witness)}", g, k, coloring)
            skip = colors[survivors[0]]
            palette = [c for c in range(1, k + 2) if c != skip]
            for c, w in zip(palette, bits(h)):
                colors[w] = c
            coloring = Coloring(tuple(colors), k + 1)
        return _checked(g, k, coloring, "non-separating clique")

    if st.case is CliqueCase.NON_INDUCED_PLUS:
        s = st.clique | 1 << st.pendant
        rest = full & ~s
        _color_rest(g, rest, k, colors)
        c_s = Coloring(tuple(range(1, k + 2)), k + 1)
        try:
            coloring = compose(g, s, c_s, _local(colors, rest, k + 1), target, k - 2)
        except CompositionError as exc:
            raise ProofGapReport(f"gluing K_k^+ failed: {exc}", g, k) from exc
        return _checked(g, k, coloring, "non-induced K_k^+")

    if st.case is CliqueCase.DOUBLE:
        s = st.clique | st.other
        _color_rest(g, full & ~s, k, colors)
        two_clique_coloring(colors, st.clique, st.pendant, st.other, st.attachment, k)
        return _checked(g, k, Coloring(tuple(colors), k + 1), "double clique")

    # induced K_k^+: pendant u -> k+1, its neighbour v -> k, rest of the clique 1..k-1
    u, v = st.pendant, st.attachment
    s = st.clique | 1 << u
    _color_rest(g, full & ~s, k, colors)
    colors[u] = k + 1
    colors[v] = k
    for c, w in enumerate(bits(st.clique & ~(1 << v)), start=1):
        colors[w] = c
    return _checked(g, k, Coloring(tuple(colors), k + 1), "induced K_k^+")


def _checked(g: Graph, k: int, coloring: Coloring, step: str) -> Coloring:
    cert = verify_partition(g, coloring, Target.clique(k))
    if not cert.passed:
        raise ProofGapReport(
            f"{step}: class {cert.class_index} leaves k-clique {list(cert.witness)}", g, k, coloring
        )
    return coloring


def compose_colorings(g: Graph, s: int, c_s: Coloring, c_rest: Coloring, k: int) -> Coloring:
    """Glue a colouring of ``G[S]`` to one of ``G - S`` (k-clique version).

    Each residual component of a class of ``G[S]`` may join ``G - S`` by at
    most ``k - 2`` edges; violations raise CompositionError.
    """
    return compose(g, s, c_s, c_rest, Target.clique(k), k - 2)
