from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from conftest import graphs
from isopart.graph import (
    Family,
    Graph,
    bits,
    chordless_cycles_in,
    closed_neighborhood,
    complete_graph,
    components,
    cycle_graph,
    disjoint_union,
    double_clique,
    empty_graph,
    find_cycle,
    find_k_clique,
    induced_subgraph,
    is_claw_free,
    is_connected,
    iter_cliques_in,
    path_graph,
    petersen_graph,
    recognize,
    shortest_cycle_in,
    star_graph,
    to_mask,
)


def as_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def test_rejects_asymmetric_and_loops():
    with pytest.raises(ValueError):
        Graph(2, [0b10, 0])
    with pytest.raises(ValueError):
        Graph(1, [0b1])
    with pytest.raises(ValueError):
        Graph(2, [0b100, 0])
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(0, 3)])


def test_graph_is_immutable():
    g = path_graph(3)
    with pytest.raises(AttributeError):
        g.n = 4


def test_closed_neighborhood_examples():
    assert closed_neighborhood(cycle_graph(5), 0b1) == to_mask([4, 0, 1])
    assert closed_neighborhood(complete_graph(4), 1 << 2) == 0b1111
    assert closed_neighborhood(petersen_graph(), 0) == 0


@given(graphs(), st.data())
def test_closed_neighborhood_contains_set_and_is_monotone(g, data):
    s = data.draw(st.integers(0, g.full))
    t = data.draw(st.integers(0, g.full)) | s
    assert closed_neighborhood(g, s) & s == s
    assert closed_neighborhood(g, s) & closed_neighborhood(g, t) == closed_neighborhood(g, s)


def test_induced_subgraph_examples():
    sub, index = induced_subgraph(complete_graph(4), 0b0111)
    assert sub == complete_graph(3)
    sub, index = induced_subgraph(cycle_graph(6), to_mask([0, 2, 4]))
    assert sub.num_edges() == 0 and sub.n == 3
    assert index.to_original == (0, 2, 4)
    assert index.to_local[4] == 2
    sub, index = induced_subgraph(cycle_graph(5), 0b11111)
    assert sub == cycle_graph(5)
    assert index.to_original == (0, 1, 2, 3, 4)


def test_components_examples():
    two = disjoint_union(complete_graph(3), complete_graph(3))
    assert components(two) == [0b000111, 0b111000]
    assert components(petersen_graph()) == [petersen_graph().full]
    assert components(empty_graph(0)) == []


@given(graphs())
def test_components_match_networkx(g):
    ours = [set(bits(c)) for c in components(g)]
    theirs = sorted((set(c) for c in nx.connected_components(as_nx(g))), key=min)
    assert ours == theirs
    assert [min(c) for c in ours] == sorted(min(c) for c in ours)


def test_find_k_clique_examples():
    assert find_k_clique(complete_graph(4), 3) == 0b0111
    assert find_k_clique(cycle_graph(5), 3) is None
    assert find_k_clique(double_clique(3), 3) == 0b000111
    with pytest.raises(ValueError):
        find_k_clique(complete_graph(3), 0)


@given(graphs(max_n=8), st.integers(1, 5))
def test_find_k_clique_matches_brute_force(g, k):
    found = find_k_clique(g, k)
    brute = [c for c in combinations(range(g.n), k) if all(g.has_edge(a, b) for a, b in combinations(c, 2))]
    if found is None:
        assert brute == []
    else:
        # lexicographically least clique
        assert list(bits(found)) == list(brute[0])


@given(graphs(max_n=8), st.integers(1, 4))
def test_iter_cliques_counts_every_clique_once(g, k):
    ours = list(iter_cliques_in(g.adj, g.full, k))
    brute = [c for c in combinations(range(g.n), k) if all(g.has_edge(a, b) for a, b in combinations(c, 2))]
    assert sorted(ours) == sorted(to_mask(c) for c in brute)


def test_find_cycle_examples():
    assert find_cycle(path_graph(6)) is None
    assert find_cycle(star_graph(4)) is None
    cyc = find_cycle(cycle_graph(4))
    assert sorted(cyc) == [0, 1, 2, 3]
    assert len(find_cycle(complete_graph(4))) >= 3


@given(graphs(max_n=9))
def test_find_cycle_matches_forest_edge_count(g):
    cyc = find_cycle(g)
    forest = all(
        g_sub.num_edges() == g_sub.n - 1
        for g_sub in (induced_subgraph(g, c)[0] for c in components(g))
    )
    assert (cyc is None) == forest
    if cyc is not None:
        assert len(set(cyc)) == len(cyc) >= 3
        assert all(g.has_edge(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc)))


@given(graphs(max_n=9))
def test_shortest_cycle_has_girth_length(g):
    cyc = shortest_cycle_in(g.adj, g.full)
    girth = nx.girth(as_nx(g)) if g.n else float("inf")
    if cyc is None:
        assert girth == float("inf")
    else:
        assert len(cyc) == girth


@given(graphs(max_n=8))
def test_chordless_cycles_match_networkx(g):
    ours = sorted(tuple(c) for c in chordless_cycles_in(g.adj, g.full))
    theirs = nx.chordless_cycles(as_nx(g))
    canon = []
    for c in theirs:
        if len(c) < 3:
            continue
        i = c.index(min(c))
        c = c[i:] + c[:i]
        if c[1] > c[-1]:
            c = [c[0]] + c[1:][::-1]
        canon.append(tuple(c))
    assert ours == sorted(canon)


def test_petersen_has_22_chordless_cycles():
    g = petersen_graph()
    assert sum(1 for _ in chordless_cycles_in(g.adj, g.full)) == 22


def test_claw_free_examples():
    assert not is_claw_free(star_graph(3))
    assert all(is_claw_free(cycle_graph(n)) for n in range(3, 9))
    assert is_claw_free(cycle_graph(4))


@given(graphs(max_n=7))
def test_claw_free_matches_brute_force(g):
    claw = any(
        all(g.has_edge(c, x) for x in trio) and not any(g.has_edge(a, b) for a, b in combinations(trio, 2))
        for c in range(g.n)
        for trio in combinations([v for v in range(g.n) if v != c], 3)
    )
    assert is_claw_free(g) == (not claw)


def test_recognize_examples():
    tag = recognize(complete_graph(3))
    assert tag.family is Family.COMPLETE and tag.is_also_c3 and tag.n == 3
    assert recognize(path_graph(1)).family is Family.TREE
    assert recognize(petersen_graph()).family is Family.OTHER
    assert recognize(path_graph(5)).family is Family.PATH
    assert recognize(cycle_graph(6)).family is Family.CYCLE
    assert recognize(star_graph(4)).family is Family.STAR
    assert not recognize(complete_graph(4)).is_also_c3


def test_petersen_is_cubic_with_girth_five():
    g = petersen_graph()
    assert {g.degree(v) for v in range(10)} == {3}
    assert len(shortest_cycle_in(g.adj, g.full)) == 5


@given(graphs(max_n=8))
def test_recognize_agrees_with_networkx(g):
    h = as_nx(g)
    fam = recognize(g).family
    connected = is_connected(g) if g.n else True
    if fam is Family.COMPLETE:
        assert g.num_edges() == g.n * (g.n - 1) // 2
    elif fam is Family.CYCLE:
        assert connected and all(d == 2 for _, d in h.degree())
    elif fam in (Family.PATH, Family.STAR, Family.TREE):
        assert g.n <= 1 or nx.is_tree(h)
    else:
        assert not (g.n >= 1 and nx.is_tree(h))


@given(graphs(max_n=8), st.randoms())
def test_relabel_preserves_edge_count_and_degrees(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    h = g.relabel(perm)
    assert h.num_edges() == g.num_edges()
    assert all(h.degree(perm[v]) == g.degree(v) for v in range(g.n))
