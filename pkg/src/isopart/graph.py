"""Bitset graphs and the structural queries the rest of the package builds on.

Vertex sets are plain Python ints used as bitsets: bit ``v`` is set when
vertex ``v`` is a member.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Optional, Sequence


def bits(mask: int) -> Iterator[int]:
    """Yield the members of a bitset in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def popcount(mask: int) -> int:
    return mask.bit_count()


def lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``.

    ``adj[v]`` is the open neighbourhood of ``v`` as a bitset.
    """

    __slots__ = ("n", "adj", "_hash")

    def __init__(self, n: int, adj: Sequence[int]):
        if n < 0 or len(adj) != n:
            raise ValueError("adjacency must have exactly n rows")
        full = (1 << n) - 1
        adj = tuple(adj)
        for v, row in enumerate(adj):
            if row & ~full:
                raise ValueError(f"vertex {v} has a neighbour outside 0..{n - 1}")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in bits(row):
                if not adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", adj)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @classmethod
    def _unchecked(cls, n: int, adj: Sequence[int]) -> "Graph":
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", tuple(adj))
        object.__setattr__(g, "_hash", None)
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj)

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def num_edges(self) -> int:
        return sum(popcount(row) for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def max_degree(self) -> int:
        return max((popcount(row) for row in self.adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges()))

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.n, self.adj)))
        return self._hash

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"


# -- named graphs ---------------------------------------------------------


def empty_graph(n: int) -> Graph:
    return Graph(n, [0] * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, [full & ~(1 << v) for v in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def star_graph(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def double_clique(k: int) -> Graph:
    """Two disjoint k-cliques joined by the edge ``(k-1, k)``."""
    edges = [(u, v) for u, v in combinations(range(k), 2)]
    edges += [(k + u, k + v) for u, v in combinations(range(k), 2)]
    edges.append((k - 1, k))
    return Graph.from_edges(2 * k, edges)


def clique_plus(k: int) -> Graph:
    """A k-clique on ``0..k-1`` with pendant vertex ``k`` hanging off ``k-1``."""
    edges = [(u, v) for u, v in combinations(range(k), 2)]
    edges.append((k - 1, k))
    return Graph.from_edges(k + 1, edges)


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for g in graphs:
        edges += [(u + offset, v + offset) for u, v in g.edges()]
        offset += g.n
    return Graph.from_edges(offset, edges)


# -- neighbourhoods and subgraphs ------------------------------------------


def closed_neighborhood(g: Graph, s: int) -> int:
    """``S`` together with every neighbour of a member of ``S``."""
    out = s
    adj = g.adj
    for v in bits(s):
        out |= adj[v]
    return out


class IndexMap:
    """Bidirectional map between induced-subgraph indices and original vertices."""

    __slots__ = ("to_original", "to_local")

    def __init__(self, originals: Sequence[int]):
        self.to_original = tuple(originals)
        self.to_local = {v: i for i, v in enumerate(self.to_original)}

    def lift(self, local_mask: int) -> int:
        return to_mask(self.to_original[i] for i in bits(local_mask))

    def lift_list(self, local: Iterable[int]) -> list[int]:
        return [self.to_original[i] for i in local]

    def __len__(self):
        return len(self.to_original)


def induced_subgraph(g: Graph, s: int) -> tuple[Graph, IndexMap]:
    """Return ``G[S]`` relabelled to ``0..|S|-1`` plus the index map."""
    originals = list(bits(s))
    index = {v: i for i, v in enumerate(originals)}
    adj = []
    for v in originals:
        row = 0
        for u in bits(g.adj[v] & s):
            row |= 1 << index[u]
        adj.append(row)
    return Graph._unchecked(len(originals), adj), IndexMap(originals)


def component_masks(adj: Sequence[int], within: int) -> list[int]:
    """Connected components of the subgraph induced by ``within``, ordered by least member."""
    out = []
    rest = within
    while rest:
        seed = rest & -rest
        comp = seed
        frontier = seed
        while frontier:
            grow = 0
            for v in bits(frontier):
                grow |= adj[v]
            grow &= within & ~comp
            comp |= grow
            frontier = grow
        out.append(comp)
        rest &= ~comp
    return out


def components(g: Graph) -> list[int]:
    return component_masks(g.adj, g.full)


def is_connected(g: Graph) -> bool:
    return len(components(g)) <= 1


# -- pattern search --------------------------------------------------------


def find_clique_in(adj: Sequence[int], within: int, k: int) -> Optional[int]:
    """Lexicographically least k-clique inside ``within``, as a bitset."""
    if k <= 0:
        return 0

    def extend(chosen: int, candidates: int, need: int) -> Optional[int]:
        if need == 0:
            return chosen
        while candidates and popcount(candidates) >= need:
            low = candidates & -candidates
            v = low.bit_length() - 1
            candidates ^= low
            found = extend(chosen | low, candidates & adj[v], need - 1)
            if found is not None:
                return found
        return None

    return extend(0, within, k)


def iter_cliques_in(adj: Sequence[int], within: int, k: int) -> Iterator[int]:
    """Every k-clique inside ``within`` in lexicographic order."""

    def extend(chosen: int, candidates: int, need: int):
        if need == 0:
            yield chosen
            return
        while candidates and popcount(candidates) >= need:
            low = candidates & -candidates
            v = low.bit_length() - 1
            candidates ^= low
            yield from extend(chosen | low, candidates & adj[v], need - 1)

    if k <= 0:
        yield 0
        return
    yield from extend(0, within, k)


def find_cycle_in(adj: Sequence[int], within: int) -> Optional[list[int]]:
    """First cycle met by a DFS over ``within`` (least root first), or None."""
    parent: dict[int, int] = {}
    depth: dict[int, int] = {}
    for root in bits(within):
        if root in depth:
            continue
        parent[root] = -1
        depth[root] = 0
        stack = [(root, adj[root] & within)]
        while stack:
            v, pending = stack[-1]
            if not pending:
                stack.pop()
                continue
            low = pending & -pending
            stack[-1] = (v, pending ^ low)
            u = low.bit_length() - 1
            if u == parent[v]:
                continue
            if u in depth:
                if depth[u] < depth[v]:
                    cycle = [v]
                    w = v
                    while w != u:
                        w = parent[w]
                        cycle.append(w)
                    cycle.reverse()
                    return cycle
                continue
            parent[u] = v
            depth[u] = depth[v] + 1
            stack.append((u, adj[u] & within))
    return None


def shortest_cycle_in(adj: Sequence[int], within: int) -> Optional[list[int]]:
    """A minimum-length cycle inside ``within`` (BFS from every vertex)."""
    best: Optional[list[int]] = None
    for root in bits(within):
        parent = {root: -1}
        dist = {root: 0}
        level = [root]
        while level and (best is None or 2 * dist[level[0]] + 1 < len(best)):
            nxt = []
            for v in level:
                for u in bits(adj[v] & within):
                    if u == parent[v]:
                        continue
                    if u in dist:
                        length = dist[u] + dist[v] + 1
                        if best is None or length < len(best):
                            left, right = [v], [u]
                            while parent[left[-1]] != -1:
                                left.append(parent[left[-1]])
                            while parent[right[-1]] != -1:
                                right.append(parent[right[-1]])
                            # both chains end at root; drop the shared tail
                            while len(left) > 1 and len(right) > 1 and left[-2] == right[-2]:
                                left.pop()
                                right.pop()
                            right.pop()
                            best = left[::-1] + right
                        continue
                    parent[u] = v
                    dist[u] = dist[v] + 1
                    nxt.append(u)
            level = nxt
        if best is not None and len(best) == 3:
            break
    return best


def chordless_cycles_in(adj: Sequence[int], within: int) -> Iterator[list[int]]:
    """Every induced cycle inside ``within`` exactly once.

    Cycles start at their least vertex and the second vertex is smaller than
    the last one.
    """
    for s in bits(within):
        above = within & ~((2 << s) - 1)
        for a in bits(adj[s] & above):
            # blocked: neighbours of interior path vertices (chords otherwise)
            stack = [([s, a], 1 << s | 1 << a, 0)]
            while stack:
                path, on_path, blocked = stack.pop()
                tail = path[-1]
                for u in bits(adj[tail] & above & ~on_path & ~blocked):
                    if adj[u] >> s & 1:
                        if u > a:
                            yield path + [u]
                        continue
                    stack.append((path + [u], on_path | 1 << u, blocked | adj[tail]))


def find_k_clique(g: Graph, k: int) -> Optional[int]:
    if k < 1:
        raise ValueError("k must be positive")
    return find_clique_in(g.adj, g.full, k)


def find_cycle(g: Graph) -> Optional[list[int]]:
    return find_cycle_in(g.adj, g.full)


def is_forest_in(adj: Sequence[int], within: int) -> bool:
    edges2 = 0
    for v in bits(within):
        edges2 += popcount(adj[v] & within)
    return edges2 // 2 == popcount(within) - len(component_masks(adj, within))


def is_claw_free(g: Graph) -> bool:
    adj = g.adj
    for v in range(g.n):
        nb = list(bits(adj[v]))
        if len(nb) < 3:
            continue
        for a, b, c in combinations(nb, 3):
            if not (adj[a] >> b & 1 or adj[a] >> c & 1 or adj[b] >> c & 1):
                return False
    return True


def is_complete(g: Graph) -> bool:
    return all(row | (1 << v) == g.full for v, row in enumerate(g.adj))


def is_cycle(g: Graph) -> bool:
    return g.n >= 3 and all(popcount(row) == 2 for row in g.adj) and is_connected(g)


def is_path(g: Graph) -> bool:
    if g.n == 0 or not is_connected(g):
        return False
    degs = sorted(popcount(row) for row in g.adj)
    return g.num_edges() == g.n - 1 and degs[-1] <= 2


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and is_connected(g) and g.num_edges() == g.n - 1


def is_star(g: Graph) -> bool:
    return is_tree(g) and g.n >= 2 and g.max_degree() == g.n - 1


# -- family recognition ----------------------------------------------------


class Family(enum.Enum):
    PATH = "path"
    CYCLE = "cycle"
    COMPLETE = "complete"
    STAR = "star"
    TREE = "tree"
    OTHER = "other"


@dataclass(frozen=True)
class FamilyTag:
    family: Family
    n: int
    is_also_c3: bool = False


def recognize(g: Graph) -> FamilyTag:
    """Name the family ``g`` belongs to.

    K_3 is reported as complete with ``is_also_c3`` set; graphs on at most
    one vertex are reported as trees.
    """
    n = g.n
    if n <= 1:
        return FamilyTag(Family.TREE, n)
    if is_complete(g):
        return FamilyTag(Family.COMPLETE, n, is_also_c3=(n == 3))
    if is_cycle(g):
        return FamilyTag(Family.CYCLE, n)
    if is_path(g):
        return FamilyTag(Family.PATH, n)
    if is_star(g):
        return FamilyTag(Family.STAR, n)
    if is_tree(g):
        return FamilyTag(Family.TREE, n)
    return FamilyTag(Family.OTHER, n)
