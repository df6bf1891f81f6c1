from itertools import permutations

import pytest
from hypothesis import assume, given, strategies as st

from conftest import graphs
from isopart.cycle_partition import (
    CycleCase,
    _classify,
    _partition,
    classify_cycle_structure,
    enumerate_cycles,
    partition_cycle,
    repeating_pattern,
)
from isopart.errors import HypothesisError, SearchAborted
from isopart.formats import parse_graph6
from isopart.generate import GraphFilter, nonisomorphic_graphs, random_relabelings
from isopart.graph import (
    Graph,
    chordless_cycles_in,
    complete_graph,
    cycle_graph,
    is_claw_free,
    is_complete,
    path_graph,
    petersen_graph,
    star_graph,
)
from isopart.verify import Target, verify_partition

CYCLE = Target.cycle()
CLAW_FREE_SUBCUBIC = GraphFilter(connected=True, max_degree=3, claw_free=True)


def bowtie():
    return Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])


def brute_cycle_count(g):
    seen = set()
    for r in range(3, g.n + 1):
        for seq in permutations(range(g.n), r):
            if seq[0] != min(seq):
                continue
            if all(g.has_edge(seq[i], seq[(i + 1) % r]) for i in range(r)):
                seen.add(frozenset(frozenset((seq[i], seq[(i + 1) % r])) for i in range(r)))
    return len(seen)


def test_enumerate_cycles_examples():
    assert len(list(enumerate_cycles(complete_graph(4)))) == 7
    assert list(enumerate_cycles(cycle_graph(6))) == [[0, 1, 2, 3, 4, 5]]
    assert list(enumerate_cycles(path_graph(5))) == []
    with pytest.raises(SearchAborted):
        list(enumerate_cycles(complete_graph(5), max_count=10))


@given(graphs(max_n=6))
def test_enumerate_cycles_matches_brute_force(g):
    cycles = list(enumerate_cycles(g))
    assert len(cycles) == brute_cycle_count(g)
    for c in cycles:
        assert c[0] == min(c) and c[1] < c[-1]
        assert all(g.has_edge(c[i], c[(i + 1) % len(c)]) for i in range(len(c)))


def test_classify_base_examples():
    assert classify_cycle_structure(path_graph(7)).case is CycleCase.BASE_PATH
    assert classify_cycle_structure(cycle_graph(8)).case is CycleCase.BASE_CYCLE
    assert classify_cycle_structure(complete_graph(4)).case is CycleCase.BASE_K4


def test_bowtie_has_degree_four():
    # the bowtie centre has degree 4, so the public entry points refuse it
    with pytest.raises(HypothesisError) as err:
        classify_cycle_structure(bowtie())
    assert err.value.hypothesis == "max-degree"
    st_ = _classify(bowtie())
    assert st_.case is CycleCase.NON_SEPARATING_TRIANGLE
    assert verify_partition(bowtie(), _partition(bowtie()), CYCLE).passed


def test_partition_examples():
    assert partition_cycle(cycle_graph(4)).colors == (1, 2, 3, 4)
    assert sorted(partition_cycle(complete_graph(4)).colors) == [1, 2, 3, 4]
    c = partition_cycle(cycle_graph(7))
    assert c.m == 4 and verify_partition(cycle_graph(7), c, CYCLE).passed


def test_hypotheses_are_checked():
    cases = [
        (complete_graph(3), "excluded-graph"),
        (star_graph(3), "claw-free"),
        (complete_graph(5), "max-degree"),
        (Graph.from_edges(4, [(0, 1), (2, 3)]), "connected"),
    ]
    for g, hyp in cases:
        with pytest.raises(HypothesisError) as err:
            partition_cycle(g)
        assert err.value.hypothesis == hyp
    with pytest.raises(HypothesisError, match="excluded: C_3"):
        partition_cycle(complete_graph(3))


@pytest.mark.parametrize(
    "g6, case",
    [
        ("@", CycleCase.BASE_PATH),
        ("Cr", CycleCase.BASE_CYCLE),
        ("C~", CycleCase.BASE_K4),
        ("Cv", CycleCase.MOD4_CYCLE),
        ("EqHW", CycleCase.SPARSE_INDUCED),
        ("JqGOOGAo?J?", CycleCase.MOD4_PLUS1_INDUCED),
        ("FqJ@o", CycleCase.INDUCED_C5),
        ("Cu", CycleCase.NON_SEPARATING_TRIANGLE),
        ("GqGTA_", CycleCase.DOUBLE_TRIANGLE),
        ("Dqo", CycleCase.TRIANGLE_PLUS),
    ],
)
def test_every_case_is_reached_and_sound(g6, case):
    g = parse_graph6(g6)
    st_ = classify_cycle_structure(g)
    assert st_.case is case
    cyc = list(st_.cycle)
    if cyc:
        assert all(g.has_edge(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc)))
    if case is CycleCase.MOD4_CYCLE:
        assert len(cyc) % 4 == 0
    if case in (CycleCase.SPARSE_INDUCED, CycleCase.MOD4_PLUS1_INDUCED, CycleCase.INDUCED_C5):
        chordless = {frozenset(c) for c in chordless_cycles_in(g.adj, g.full)}
        assert frozenset(cyc) in chordless and len(cyc) >= 4
    if case is CycleCase.MOD4_PLUS1_INDUCED:
        assert len(cyc) % 4 == 1
    if case is CycleCase.INDUCED_C5:
        assert len(cyc) == 5
    if case is CycleCase.DOUBLE_TRIANGLE:
        a, b, *h2 = st_.extra
        assert g.has_edge(a, b) and len(h2) == 3 and not set(h2) & set(cyc)
    if case is CycleCase.TRIANGLE_PLUS:
        pendant, attach = st_.extra
        assert pendant not in cyc and attach in cyc and g.has_edge(pendant, attach)
    c = partition_cycle(g)
    assert c.m == 4 and verify_partition(g, c, CYCLE).passed


@pytest.mark.parametrize("length", range(4, 30))
def test_repeating_pattern_windows_hold_all_colours(length):
    pat = repeating_pattern(length)
    assert len(pat) == length
    full = length - length % 4
    for i in range(full - 3):
        assert set(pat[i : i + 4]) == {1, 2, 3, 4}
    if length % 4 == 0:
        # cyclic windows as well
        for i in range(length):
            assert {pat[(i + j) % length] for j in range(4)} == {1, 2, 3, 4}


@pytest.mark.parametrize("n", range(4, 20))
def test_plain_cycles(n):
    g = cycle_graph(n)
    assert verify_partition(g, partition_cycle(g), CYCLE).passed


def test_every_isomorphism_class_with_relabelings():
    layers = nonisomorphic_graphs(12, CLAW_FREE_SUBCUBIC)
    for n, layer in layers.items():
        for g in layer:
            if n == 3 and is_complete(g):
                continue
            for h in [g, *random_relabelings(g, 2, seed=n)]:
                c = partition_cycle(h)
                assert set(c.colors) <= {1, 2, 3, 4}
                assert verify_partition(h, c, CYCLE).passed


@st.composite
def claw_free_subcubic(draw, max_n=14):
    # a random path, then random extra edges kept only while the graph stays claw-free and subcubic
    n = draw(st.integers(1, max_n))
    order = draw(st.permutations(range(n)))
    g = Graph.from_edges(n, list(zip(order, order[1:])))
    extra = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=2 * n))
    for u, v in extra:
        if u == v or g.has_edge(u, v) or g.degree(u) >= 3 or g.degree(v) >= 3:
            continue
        h = Graph.from_edges(n, [*g.edges(), (u, v)])
        if is_claw_free(h):
            g = h
    return g


@given(claw_free_subcubic())
def test_random_claw_free_subcubic_graphs(g):
    assume(not (g.n == 3 and is_complete(g)))
    assert verify_partition(g, partition_cycle(g), CYCLE).passed


def test_petersen_is_rejected_as_having_claws():
    with pytest.raises(HypothesisError) as err:
        partition_cycle(petersen_graph())
    assert err.value.hypothesis == "claw-free"
