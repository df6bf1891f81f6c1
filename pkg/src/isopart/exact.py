"""Exact isolation and isomatic numbers, plus the easy constructive isomatic partitions.

Both exact solvers work on the hitting-set view of isolation: ``D`` isolates a
pattern copy ``P`` exactly when ``D`` meets ``N[V(P)]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graph import (
    Graph,
    bits,
    chordless_cycles_in,
    closed_neighborhood,
    component_masks,
    find_clique_in,
    induced_subgraph,
    is_forest_in,
    iter_cliques_in,
    popcount,
    shortest_cycle_in,
)
from .errors import ProofGapReport, SearchAborted
from .verify import Coloring, Target


@dataclass(frozen=True)
class IsolationResult:
    value: int
    witness: int
    nodes: int = 0


@dataclass(frozen=True)
class IsomaticResult:
    value: int
    witness: Coloring
    # pattern-free graph: every weak partition works, so there is no maximum
    unbounded: bool = False
    nodes: int = 0


DEFAULT_BUDGET = 5_000_000


def _surviving_pattern(g: Graph, target: Target, alive: int) -> Optional[int]:
    """Vertex set of some pattern copy left in ``alive``; short cycles preferred."""
    if target.kind == "cycle":
        cyc = shortest_cycle_in(g.adj, alive)
        return None if cyc is None else sum(1 << v for v in cyc)
    return find_clique_in(g.adj, alive, target.k)


def min_isolating(g: Graph, target: Target, budget: int = DEFAULT_BUDGET, max_n: int = 32) -> IsolationResult:
    """Smallest isolating set by iterative deepening on its size.

    Each node finds a pattern copy ``P`` that survives the current set and
    branches on which vertex of ``N[V(P)]`` joins the set; vertices already
    tried at this node are banned in later siblings.
    """
    if g.n > max_n:
        raise SearchAborted(f"n={g.n} exceeds the configured limit {max_n}")
    full = g.full
    adj = g.adj
    nodes = 0

    def dfs(chosen: int, covered: int, banned: int, left: int) -> Optional[int]:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise SearchAborted(f"min_isolating exceeded {budget} nodes")
        pattern = _surviving_pattern(g, target, full & ~covered)
        if pattern is None:
            return chosen
        if left == 0:
            return None
        if target.kind == "kclique" and target.k == 1:
            # domination: branch on the undominated vertex with fewest options
            best = None
            for v in bits(full & ~covered):
                opts = (adj[v] | 1 << v) & ~banned
                if best is None or popcount(opts) < popcount(best):
                    best = opts
            candidates = best
        else:
            candidates = closed_neighborhood(g, pattern) & ~banned
        for v in bits(candidates):
            found = dfs(chosen | 1 << v, covered | adj[v] | 1 << v, banned, left - 1)
            if found is not None:
                return found
            banned |= 1 << v
        return None

    for size in range(g.n + 1):
        found = dfs(0, 0, 0, size)
        if found is not None:
            return IsolationResult(size, found, nodes)
    raise AssertionError("the whole vertex set always isolates")  # pragma: no cover


def hitting_family(g: Graph, target: Target) -> list[int]:
    """Inclusion-minimal closed neighbourhoods of pattern copies.

    A set isolates ``target`` iff it meets every member. For cycles the
    chordless ones suffice: every cycle's vertex set spans a chordless cycle.
    """
    if target.kind == "cycle":
        raw = {sum(1 << v for v in cyc) for cyc in chordless_cycles_in(g.adj, g.full)}
    else:
        raw = set(iter_cliques_in(g.adj, g.full, target.k))
    hoods = sorted({closed_neighborhood(g, p) for p in raw}, key=lambda m: (popcount(m), m))
    minimal: list[int] = []
    for h in hoods:
        if not any(m & h == m for m in minimal):
            minimal.append(h)
    return minimal


def isomatic_partition(g: Graph, target: Target, m: int, budget: int = DEFAULT_BUDGET) -> tuple[Optional[Coloring], int]:
    """An ``m``-class isolating weak partition, or None if none exists.

    Equivalent to colouring the vertices so that every member of the hitting
    family sees all ``m`` colours. Colours are introduced in first-use order.
    """
    n = g.n
    family = hitting_family(g, target)
    if not family:
        colors = tuple(min(v + 1, m) for v in range(n)) if m else ()
        return (Coloring(colors, m) if m or not n else None), 0
    if m > min(popcount(h) for h in family):
        return None, 0
    incidence: list[list[int]] = [[] for _ in range(n)]
    for e, h in enumerate(family):
        for v in bits(h):
            incidence[v].append(e)
    smallest = [min((popcount(family[e]) for e in incidence[v]), default=n + 1) for v in range(n)]
    order = sorted(range(n), key=lambda v: (smallest[v], -len(incidence[v]), v))
    seen = [0] * len(family)
    free = [popcount(h) for h in family]
    assign = [0] * n
    nodes = 0

    def place(i: int, used: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise SearchAborted(f"isomatic search exceeded {budget} nodes")
        if i == n:
            return True
        v = order[i]
        for c in range(min(used + 1, m)):
            bit = 1 << c
            ok = True
            touched = []
            for e in incidence[v]:
                free[e] -= 1
                touched.append((e, seen[e]))
                seen[e] |= bit
                if popcount(seen[e]) + free[e] < m:
                    ok = False
            if ok:
                assign[v] = c + 1
                if place(i + 1, max(used, c + 1)):
                    return True
            for e, old in touched:
                free[e] += 1
                seen[e] = old
        return False

    if place(0, 0):
        return Coloring(tuple(assign), m), nodes
    return None, nodes


def max_isomatic(g: Graph, target: Target, budget: int = DEFAULT_BUDGET, max_n: int = 12) -> IsomaticResult:
    """Largest number of classes in an isolating weak partition.

    Partitions with ``m`` classes exist for every ``m`` below the maximum
    (merge two classes), so ``m`` is raised until the search fails. A
    pattern-free graph admits any number of (empty) classes; that case is
    reported as ``unbounded`` with value ``n`` and the singleton partition.
    """
    if g.n > max_n:
        raise SearchAborted(f"n={g.n} exceeds the configured limit {max_n}")
    family = hitting_family(g, target)
    if not family:
        return IsomaticResult(g.n, Coloring(tuple(range(1, g.n + 1)), g.n), unbounded=True)
    best = Coloring(tuple([1] * g.n), 1)
    total = 0
    cap = min(popcount(h) for h in family)
    for m in range(2, cap + 1):
        found, used = isomatic_partition(g, target, m, budget - total)
        total += used
        if found is None:
            break
        best = found
    return IsomaticResult(best.m, best, nodes=total)


def clique_isomatic_k_partition(g: Graph, k: int) -> Coloring:
    """``k`` classes, each isolating every k-clique.

    Peel off the least k-clique, spread its vertices over classes ``1..k``
    and repeat on what is left; once no k-clique remains the rest goes to
    class ``k``.
    """
    if k < 1:
        raise ValueError("k must be positive")
    colors = [k] * g.n
    rest = g.full
    while True:
        h = find_clique_in(g.adj, rest, k)
        if h is None:
            break
        for i, v in enumerate(bits(h), start=1):
            colors[v] = i
        rest &= ~h
    return Coloring(tuple(colors), k)


def _cycle_order(adj, comp: int) -> list[int]:
    start = comp & -comp
    v = start.bit_length() - 1
    order = [v]
    prev = -1
    while True:
        nxt = [u for u in bits(adj[v] & comp) if u != prev]
        u = min(nxt)
        if u == order[0]:
            return order
        prev, v = v, u
        order.append(v)


def cycle_isomatic_3_partition(g: Graph, budget: int = DEFAULT_BUDGET) -> Coloring:
    """Three classes, each isolating every cycle.

    Per component: trees go wholly to class 3; a cycle puts three of its
    vertices in distinct classes and the rest in class 3; anything else uses
    an isolating (K_2) 3-partition found by exact search.
    """
    colors = [3] * g.n
    edge_target = Target.clique(2)
    for comp in component_masks(g.adj, g.full):
        if is_forest_in(g.adj, comp):
            continue
        if all(popcount(g.adj[v] & comp) == 2 for v in bits(comp)):
            for i, v in enumerate(_cycle_order(g.adj, comp)[:3], start=1):
                colors[v] = i
            continue
        sub, index = induced_subgraph(g, comp)
        part, _ = isomatic_partition(sub, edge_target, 3, budget)
        if part is None:
            raise ProofGapReport("connected component has no isolating 3-partition", sub, None, None)
        for local, c in enumerate(part.colors):
            colors[index.to_original[local]] = c
    return Coloring(tuple(colors), 3)


def check_iso_iota_bound(g: Graph, target: Target, budget: int = DEFAULT_BUDGET) -> bool:
    """``iso * iota <= n``; vacuously true for pattern-free graphs (iota = 0)."""
    iota = min_isolating(g, target, budget)
    if iota.value == 0:
        return True
    iso = max_isomatic(g, target, budget)
    return iso.value * iota.value <= g.n
