"""4-colourings whose classes all isolate cycles, for connected claw-free subcubic graphs other than C_3.

Structures are tried in this fixed order; the first one found is coloured
explicitly and the rest of the graph recursively:

    paths / cycles / K_4
    cycle of length divisible by 4 (plus any triangle components it leaves)
    induced cycle joined to the rest by at most two edges
    induced cycle of length 4t+1, t >= 2
    induced 5-cycle
    non-separating triangle
    two triangles joined by an edge
    triangle with a pendant edge

Each level is verified before it is returned; a failure raises ProofGapReport.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterator, Optional

from .compose import CompositionError, compose
from .errors import HypothesisError, ProofGapReport, SearchAborted
from .graph import (
    Graph,
    bits,
    chordless_cycles_in,
    component_masks,
    induced_subgraph,
    is_claw_free,
    is_complete,
    is_connected,
    is_forest_in,
    iter_cliques_in,
    lowest,
    popcount,
    to_mask,
)
from .verify import Coloring, Target, verify_partition

CYCLE = Target.cycle()
DEFAULT_CYCLE_BUDGET = 1_000_000


class CycleCase(enum.Enum):
    BASE_PATH = "path"
    BASE_TREE = "tree"
    BASE_CYCLE = "cycle"
    BASE_K4 = "k4"
    MOD4_CYCLE = "cycle-length-0-mod-4"
    SPARSE_INDUCED = "sparsely-attached-induced-cycle"
    MOD4_PLUS1_INDUCED = "induced-cycle-length-1-mod-4"
    INDUCED_C5 = "induced-5-cycle"
    NON_SEPARATING_TRIANGLE = "non-separating-triangle"
    DOUBLE_TRIANGLE = "double-triangle"
    TRIANGLE_PLUS = "triangle-plus"
    CONTRADICTION = "contradiction"


@dataclass(frozen=True)
class CycleStructure:
    case: CycleCase
    # the cycle in traversal order, or the triangle's vertices
    cycle: tuple[int, ...] = ()
    # second triangle (double triangle); pendant info etc.
    extra: tuple[int, ...] = field(default=())


def enumerate_cycles(g: Graph, max_count: Optional[int] = DEFAULT_CYCLE_BUDGET) -> Iterator[list[int]]:
    """Every simple cycle once, starting at its least vertex with the smaller neighbour second."""
    adj = g.adj
    count = 0
    for s in range(g.n):
        above = g.full & ~((2 << s) - 1)
        stack = [(s, [s], 1 << s)]
        while stack:
            v, path, on_path = stack.pop()
            for u in bits(adj[v] & above & ~on_path):
                stack.append((u, path + [u], on_path | 1 << u))
            if len(path) >= 3 and adj[v] >> s & 1 and path[1] < path[-1]:
                count += 1
                if max_count is not None and count > max_count:
                    raise SearchAborted(f"more than {max_count} cycles")
                yield path


def check_hypotheses(g: Graph) -> None:
    if g.n == 0 or not is_connected(g):
        raise HypothesisError("connected", "input graph is not connected")
    if g.max_degree() > 3:
        raise HypothesisError("max-degree", f"maximum degree {g.max_degree()} exceeds 3")
    if not is_claw_free(g):
        raise HypothesisError("claw-free", "input graph contains an induced claw")
    if g.n == 3 and is_complete(g):
        raise HypothesisError("excluded-graph", "excluded: C_3")


def _cycle_order(g: Graph) -> list[int]:
    order = [0]
    prev = -1
    v = 0
    while True:
        u = min(w for w in bits(g.adj[v]) if w != prev)
        if u == 0:
            return order
        order.append(u)
        prev, v = v, u


def _joins(g: Graph, inside: int) -> list[tuple[int, int]]:
    """Edges from ``inside`` to the rest, as (inside vertex, outside vertex)."""
    out = g.full & ~inside
    return [(a, b) for a in bits(inside) for b in bits(g.adj[a] & out)]


def _is_triangle(g: Graph, comp: int) -> bool:
    return popcount(comp) == 3 and all(popcount(g.adj[v] & comp) == 2 for v in bits(comp))


def classify_cycle_structure(g: Graph, max_cycles: Optional[int] = DEFAULT_CYCLE_BUDGET) -> CycleStructure:
    check_hypotheses(g)
    return _classify(g, max_cycles)


def _classify(g: Graph, max_cycles: Optional[int] = DEFAULT_CYCLE_BUDGET) -> CycleStructure:
    adj, full = g.adj, g.full
    if is_forest_in(adj, full):
        return CycleStructure(CycleCase.BASE_PATH if g.max_degree() <= 2 else CycleCase.BASE_TREE)
    if g.max_degree() <= 2:
        return CycleStructure(CycleCase.BASE_CYCLE, tuple(_cycle_order(g)))
    if g.n == 4 and is_complete(g):
        return CycleStructure(CycleCase.BASE_K4, (0, 1, 2, 3))

    for cyc in enumerate_cycles(g, max_cycles):
        if len(cyc) % 4 == 0:
            return CycleStructure(CycleCase.MOD4_CYCLE, tuple(cyc))

    induced = sorted(
        (c for c in chordless_cycles_in(adj, full) if len(c) >= 4),
        key=lambda c: (len(c), c),
    )
    for cyc in induced:
        if len(_joins(g, to_mask(cyc))) <= 2:
            return CycleStructure(CycleCase.SPARSE_INDUCED, tuple(cyc))
    for cyc in induced:
        if len(cyc) % 4 == 1 and len(cyc) >= 9:
            return CycleStructure(CycleCase.MOD4_PLUS1_INDUCED, tuple(cyc))
    for cyc in induced:
        if len(cyc) == 5:
            return CycleStructure(CycleCase.INDUCED_C5, tuple(cyc))

    triangles = list(iter_cliques_in(adj, full, 3))
    for h in triangles:
        if len(component_masks(adj, full & ~h)) == 1:
            return CycleStructure(CycleCase.NON_SEPARATING_TRIANGLE, tuple(bits(h)))
    for i, h1 in enumerate(triangles):
        for h2 in triangles[i + 1 :]:
            if h1 & h2:
                continue
            for a in bits(h1):
                if adj[a] & h2:
                    return CycleStructure(CycleCase.DOUBLE_TRIANGLE, tuple(bits(h1)), (a, lowest(adj[a] & h2), *bits(h2)))
    for h in triangles:
        for u in bits(full & ~h):
            if adj[u] & h:
                return CycleStructure(CycleCase.TRIANGLE_PLUS, tuple(bits(h)), (u, lowest(adj[u] & h)))
    return CycleStructure(CycleCase.CONTRADICTION)


# -- colouring -------------------------------------------------------------


def repeating_pattern(length: int) -> list[int]:
    """1,2,3,4 repeated; lengths 4t+1 end in an extra 3 and 4t+2 in an extra 3,4.

    Lengths 4t+3 end in 1,2,3 (only used for plain cycles).
    """
    base = [1, 2, 3, 4] * (length // 4)
    tail = {0: [], 1: [3], 2: [3, 4], 3: [1, 2, 3]}[length % 4]
    return base + tail


def partition_cycle(g: Graph) -> Coloring:
    """A 4-colouring of ``g`` whose every class is cycle-isolating.

    Raises HypothesisError when ``g`` is disconnected, not claw-free, has a
    vertex of degree 4 or more, or is C_3; ProofGapReport if a step fails
    verification.
    """
    check_hypotheses(g)
    return _partition(g)


def _checked(g: Graph, coloring: Coloring, step: str) -> Coloring:
    cert = verify_partition(g, coloring, CYCLE)
    if not cert.passed:
        raise ProofGapReport(f"{step}: class {cert.class_index} leaves cycle {list(cert.witness)}", g, None, coloring)
    return coloring


def _color_rest(g: Graph, rest: int, colors: list[int]) -> None:
    for comp in component_masks(g.adj, rest):
        sub, index = induced_subgraph(g, comp)
        if sub.n == 3 and is_complete(sub):
            raise ProofGapReport("a leftover component is C_3", g)
        part = _partition(sub)
        for local, c in enumerate(part.colors):
            colors[index.to_original[local]] = c


def _glue(g: Graph, s: int, colors: list[int], step: str) -> Coloring:
    """Glue the colours on ``S`` to those on ``G - S`` and verify the result."""
    rest = g.full & ~s
    c_s = Coloring(tuple(colors[v] for v in bits(s)), 4)
    c_rest = Coloring(tuple(colors[v] for v in bits(rest)), 4)
    try:
        coloring = compose(g, s, c_s, c_rest, CYCLE, 1)
    except CompositionError as exc:
        raise ProofGapReport(f"{step}: {exc}", g, None, Coloring(tuple(colors), 4)) from exc
    return _checked(g, coloring, step)


def _attach_triangles(g: Graph, core: int, colors: list[int]) -> int:
    """Absorb the triangle components of ``G - core``; returns the enlarged set.

    Each triangle avoids the colour of its first neighbour in ``core``.
    """
    s = core
    for comp in component_masks(g.adj, g.full & ~core):
        if not _is_triangle(g, comp):
            continue
        anchor = min(a for a in bits(core) if g.adj[a] & comp)
        palette = [c for c in (1, 2, 3, 4) if c != colors[anchor]]
        for c, w in zip(palette, bits(comp)):
            colors[w] = c
        s |= comp
    return s


def _pairs_on_cycle(g: Graph, cyc: list[int]) -> Optional[dict[int, tuple[int, int]]]:
    """Outside vertex -> its two consecutive neighbours on ``cyc`` (in cycle order).

    None when the attachments are not exactly two such vertices, four edges.
    """
    c = to_mask(cyc)
    pos = {v: i for i, v in enumerate(cyc)}
    L = len(cyc)
    joins = _joins(g, c)
    outside = sorted({b for _, b in joins})
    if len(joins) != 4 or len(outside) != 2:
        return None
    pairs = {}
    for x in outside:
        on = sorted(pos[a] for a in bits(g.adj[x] & c))
        if len(on) != 2:
            return None
        i, j = on
        if j == i + 1:
            pairs[x] = (cyc[i], cyc[j])
        elif i == 0 and j == L - 1:
            pairs[x] = (cyc[j], cyc[i])
        else:
            return None
    return pairs


def _orientations(cyc: list[int]) -> list[list[int]]:
    return [list(cyc), [cyc[0]] + list(reversed(cyc[1:]))]


def _partition(g: Graph) -> Coloring:
    st = _classify(g)
    full = g.full
    colors = [0] * g.n
    case = st.case

    if case in (CycleCase.BASE_PATH, CycleCase.BASE_TREE):
        return Coloring(tuple([1] * g.n), 4)

    if case is CycleCase.BASE_CYCLE:
        for c, v in zip(repeating_pattern(g.n), st.cycle):
            colors[v] = c
        return _checked(g, Coloring(tuple(colors), 4), "plain cycle")

    if case is CycleCase.BASE_K4:
        return _checked(g, Coloring((1, 2, 3, 4), 4), "K_4")

    if case is CycleCase.MOD4_CYCLE:
        cyc = st.cycle
        for c, v in zip(repeating_pattern(len(cyc)), cyc):
            colors[v] = c
        s = _attach_triangles(g, to_mask(cyc), colors)
        _color_rest(g, full & ~s, colors)
        return _glue(g, s, colors, "cycle of length 0 mod 4")

    if case is CycleCase.SPARSE_INDUCED:
        return _sparse_induced(g, list(st.cycle))

    if case is CycleCase.MOD4_PLUS1_INDUCED:
        return _long_induced(g, list(st.cycle))

    if case is CycleCase.INDUCED_C5:
        return _induced_c5(g, list(st.cycle))

    if case is CycleCase.NON_SEPARATING_TRIANGLE:
        return _non_separating_triangle(g, to_mask(st.cycle))

    if case is CycleCase.DOUBLE_TRIANGLE:
        h1 = to_mask(st.cycle)
        u, v, *rest2 = st.extra
        h2 = to_mask(rest2)
        _color_rest(g, full & ~(h1 | h2), colors)
        _bridge_coloring(g, colors, h1, u, h2, v)
        return _checked(g, Coloring(tuple(colors), 4), "double triangle")

    if case is CycleCase.TRIANGLE_PLUS:
        h = to_mask(st.cycle)
        pendant, attach = st.extra
        _color_rest(g, full & ~(h | 1 << pendant), colors)
        colors[pendant] = 1
        colors[attach] = 2
        for c, w in zip((3, 4), bits(h & ~(1 << attach))):
            colors[w] = c
        return _checked(g, Coloring(tuple(colors), 4), "triangle with pendant")

    raise ProofGapReport("no reducible structure found in a claw-free subcubic graph", g)


def _bridge_coloring(g: Graph, colors: list[int], h1: int, u: int, h2: int, v: int) -> None:
    """Two triangles joined by ``uv``: u->4, v->3, the other two pairs get 1 and 2."""
    colors[u] = 4
    colors[v] = 3
    for c, w in zip((1, 2), bits(h1 & ~(1 << u))):
        colors[w] = c
    for c, w in zip((1, 2), bits(h2 & ~(1 << v))):
        colors[w] = c


def _walk_from(cyc: list[int], start: int, away_from: int) -> list[int]:
    """The cycle traversed from ``start`` in the direction that leaves ``away_from`` last."""
    L = len(cyc)
    i = cyc.index(start)
    step = 1 if cyc[(i - 1) % L] == away_from else -1
    return [cyc[(i + step * j) % L] for j in range(L)]


def _sparse_induced(g: Graph, cyc: list[int]) -> Coloring:
    c = to_mask(cyc)
    joins = _joins(g, c)
    L = len(cyc)
    outside = {b for _, b in joins}
    inner = sorted(a for a, _ in joins)
    if len(joins) != 2 or len(outside) != 1 or L % 4 not in (1, 2):
        raise ProofGapReport(f"induced cycle {cyc} has an unexpected attachment {joins}", g)
    u1, u2 = inner
    if not g.has_edge(u1, u2):
        raise ProofGapReport(f"attachments {u1},{u2} of induced cycle are not consecutive", g)
    colors = [0] * g.n
    _color_rest(g, g.full & ~c, colors)
    for col, v in zip(repeating_pattern(L), _walk_from(cyc, u1, u2)):
        colors[v] = col
    return _glue(g, c, colors, "sparsely attached induced cycle")


def _long_induced(g: Graph, cyc: list[int]) -> Coloring:
    """Induced cycle of length 4t+1 (t >= 2) with two outside vertices on consecutive pairs.

    The pairs are named and the cycle oriented so that, when the two pairs
    are adjacent on the cycle, they read as four consecutive vertices; the
    remaining namings are tried only if that one fails verification.
    """
    c = to_mask(cyc)
    colors = [0] * g.n
    _color_rest(g, g.full & ~c, colors)
    L = len(cyc)
    candidates = []
    for order in _orientations(cyc):
        pairs = _pairs_on_cycle(g, order)
        if pairs is None:
            raise ProofGapReport(f"induced cycle {cyc} has an unexpected attachment pattern", g)
        pos = {v: i for i, v in enumerate(order)}
        names = sorted(pairs)
        for first, second in (names, names[::-1]):
            (_, b1), (a2, b2) = pairs[first], pairs[second]
            consecutive = pos[a2] == (pos[b1] + 1) % L
            candidates.append((not consecutive, order, pos, b1, b2, consecutive))
    candidates.sort(key=lambda cand: cand[0])
    last_error: Optional[ProofGapReport] = None
    for _, order, pos, b1, b2, consecutive in candidates:
        trial = list(colors)
        walk = [order[(pos[b1] + j) % L] for j in range(L)]
        for col, v in zip(repeating_pattern(L), walk):
            trial[v] = col
        if consecutive:
            nxt = order[(pos[b2] + 1) % L]
            trial[b2], trial[nxt] = trial[nxt], trial[b2]
        try:
            return _glue(g, c, trial, "induced cycle of length 4t+1")
        except ProofGapReport as exc:
            last_error = exc
    raise last_error


def _induced_c5(g: Graph, cyc: list[int]) -> Coloring:
    last_error: Optional[ProofGapReport] = None
    for order in _orientations(cyc):
        pairs = _pairs_on_cycle(g, order)
        if pairs is None:
            raise ProofGapReport(f"induced 5-cycle {cyc} has an unexpected attachment pattern", g)
        pos = {v: i for i, v in enumerate(order)}
        for v1, v2 in (tuple(sorted(pairs)), tuple(sorted(pairs))[::-1]):
            (a1, b1), (a2, b2) = pairs[v1], pairs[v2]
            if pos[a2] != (pos[b1] + 1) % 5:
                continue
            u3 = order[(pos[b2] + 1) % 5]
            outer = [a1, v1, b1, a2, v2, b2, u3]
            colors = [0] * g.n
            for col, v in zip((1, 2, 3, 4, 1, 2, 4), outer):
                colors[v] = col
            s = _attach_triangles(g, to_mask(outer), colors)
            _color_rest(g, g.full & ~s, colors)
            try:
                return _glue(g, s, colors, "induced 5-cycle")
            except ProofGapReport as exc:
                last_error = exc
    if last_error is None:
        raise ProofGapReport(f"induced 5-cycle {cyc}: attachment pairs are not adjacent", g)
    raise last_error


def _non_separating_triangle(g: Graph, h: int) -> Coloring:
    adj, full = g.adj, g.full
    rest = full & ~h
    u, v = next((a, lowest(adj[a] & rest)) for a in bits(h) if adj[a] & rest)
    colors = [0] * g.n
    sub, index = induced_subgraph(g, rest)
    if sub.n == 3 and is_complete(sub):
        _bridge_coloring(g, colors, h, u, rest, v)
        return _checked(g, Coloring(tuple(colors), 4), "triangle next to a triangle")
    part = _partition(sub)
    cv = part.colors[index.to_local[v]]
    swap = {cv: 4, 4: cv}
    for local, c in enumerate(part.colors):
        colors[index.to_original[local]] = swap.get(c, c)
    for c, w in enumerate(bits(h), start=1):
        colors[w] = c
    return _checked(g, Coloring(tuple(colors), 4), "non-separating triangle")
