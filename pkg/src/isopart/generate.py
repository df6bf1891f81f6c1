"""Small-graph streams: labelled exhaustive enumeration and isomorph-free generation."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Optional

import networkx as nx

from .graph import Graph, bits, is_claw_free, is_connected, popcount

LABELED_MAX_N = 7


@dataclass(frozen=True)
class GraphFilter:
    connected: bool = False
    max_degree: Optional[int] = None
    claw_free: bool = False

    def accepts(self, g: Graph) -> bool:
        if self.max_degree is not None and g.max_degree() > self.max_degree:
            return False
        if self.connected and not is_connected(g):
            return False
        if self.claw_free and not is_claw_free(g):
            return False
        return True


def enumerate_graphs(n: int, flt: GraphFilter = GraphFilter()) -> Iterator[Graph]:
    """Every labelled graph on ``n`` vertices passing ``flt``.

    Edges are decided pair by pair so the degree cap prunes whole subtrees;
    connectivity and claw-freeness are tested at the leaves.
    """
    if not 1 <= n <= LABELED_MAX_N:
        raise ValueError(f"labelled enumeration supports 1 <= n <= {LABELED_MAX_N}, got {n}")
    pairs = list(combinations(range(n), 2))
    cap = n if flt.max_degree is None else flt.max_degree
    adj = [0] * n
    deg = [0] * n
    leaf_filter = GraphFilter(connected=flt.connected, claw_free=flt.claw_free)

    def rec(i: int):
        if i == len(pairs):
            g = Graph._unchecked(n, adj)
            if leaf_filter.accepts(g):
                yield g
            return
        yield from rec(i + 1)
        u, v = pairs[i]
        if deg[u] < cap and deg[v] < cap:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            deg[u] += 1
            deg[v] += 1
            yield from rec(i + 1)
            adj[u] ^= 1 << v
            adj[v] ^= 1 << u
            deg[u] -= 1
            deg[v] -= 1

    yield from rec(0)


def _invariant(g: Graph) -> tuple:
    adj = g.adj
    degs = [popcount(r) for r in adj]
    per_vertex = []
    for v in range(g.n):
        tri = sum(popcount(adj[u] & adj[v]) for u in bits(adj[v])) // 2
        second = popcount(_ball2(adj, v))
        per_vertex.append((degs[v], tuple(sorted(degs[u] for u in bits(adj[v]))), tri, second))
    return (g.n, sum(degs), tuple(sorted(per_vertex)))


def _ball2(adj, v: int) -> int:
    out = adj[v]
    for u in bits(adj[v]):
        out |= adj[u]
    return out


def _to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


class IsomorphClassStore:
    """Deduplicates graphs up to isomorphism: invariant buckets, then VF2 inside a bucket."""

    def __init__(self):
        self._buckets: dict[tuple, list[tuple[Graph, nx.Graph]]] = {}
        self.graphs: list[Graph] = []

    def add(self, g: Graph) -> bool:
        key = _invariant(g)
        bucket = self._buckets.setdefault(key, [])
        h = None
        for _, other in bucket:
            if h is None:
                h = _to_nx(g)
            if nx.is_isomorphic(h, other):
                return False
        bucket.append((g, h if h is not None else _to_nx(g)))
        self.graphs.append(g)
        return True


def nonisomorphic_graphs(n_max: int, flt: GraphFilter = GraphFilter()) -> dict[int, list[Graph]]:
    """One representative per isomorphism class for every order ``1..n_max``.

    Every class handled here (degree cap, claw-freeness, connectivity) is closed
    under deleting a suitable vertex: for connected graphs, a non-cut vertex.
    So each order is produced by adding one vertex to the previous order's
    representatives in every admissible way.
    """
    cap = None if flt.max_degree is None else flt.max_degree
    out: dict[int, list[Graph]] = {}
    layer = [Graph._unchecked(1, [0])]
    out[1] = layer
    for n in range(2, n_max + 1):
        store = IsomorphClassStore()
        old = n - 1
        for g in layer:
            free = [v for v in range(old) if cap is None or popcount(g.adj[v]) < cap]
            top = old if cap is None else min(cap, old)
            for size in range(0 if not flt.connected else 1, top + 1):
                for nbrs in combinations(free, size):
                    adj = list(g.adj)
                    mask = 0
                    for v in nbrs:
                        adj[v] |= 1 << old
                        mask |= 1 << v
                    adj.append(mask)
                    h = Graph._unchecked(n, adj)
                    if flt.claw_free and not is_claw_free(h):
                        continue
                    store.add(h)
        layer = store.graphs
        out[n] = layer
    return out


def random_relabelings(g: Graph, count: int, seed: int) -> Iterator[Graph]:
    rng = random.Random(seed)
    perm = list(range(g.n))
    for _ in range(count):
        rng.shuffle(perm)
        yield g.relabel(perm)
