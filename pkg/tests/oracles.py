"""Slow, obviously-correct reference implementations used as test oracles.

Nothing here shares code with the solvers beyond the Graph container: the
pattern tests below re-derive cliques and cycles from edge lists.
"""

from __future__ import annotations

from itertools import combinations

import networkx as nx


def nbhd_closed(g, vertices) -> set[int]:
    out = set(vertices)
    for v in vertices:
        out.update(u for u in range(g.n) if g.has_edge(u, v))
    return out


def has_kclique(g, alive: set[int], k: int) -> bool:
    return any(all(g.has_edge(a, b) for a, b in combinations(c, 2)) for c in combinations(sorted(alive), k))


def has_cycle(g, alive: set[int]) -> bool:
    # a graph is a forest iff |E| = |V| - #components
    h = nx.Graph()
    h.add_nodes_from(alive)
    h.add_edges_from((a, b) for a, b in combinations(sorted(alive), 2) if g.has_edge(a, b))
    return h.number_of_edges() > h.number_of_nodes() - nx.number_connected_components(h)


def isolates(g, d, target) -> bool:
    alive = set(range(g.n)) - nbhd_closed(g, d)
    if target.kind == "cycle":
        return not has_cycle(g, alive)
    return not has_kclique(g, alive, target.k)


def naive_iota(g, target) -> int:
    for size in range(g.n + 1):
        for d in combinations(range(g.n), size):
            if isolates(g, d, target):
                return size
    raise AssertionError


def set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        yield [[first]] + part
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1 :]


def naive_isomatic(g, target):
    """(max classes, unbounded?) over weak partitions into isolating sets.

    Empty classes help only when the empty set isolates, i.e. when the graph
    has no copy of the pattern; then the number is unbounded.
    """
    if isolates(g, (), target):
        return g.n, True
    best = 0
    for part in set_partitions(list(range(g.n))):
        if len(part) > best and all(isolates(g, block, target) for block in part):
            best = len(part)
    return best, False


def naive_partition_ok(g, colors, m, target) -> bool:
    return all(isolates(g, [v for v in range(g.n) if colors[v] == i], target) for i in range(1, m + 1))
