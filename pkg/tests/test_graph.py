import itertools

import networkx as nx
import pytest
from conftest import brute_force_chi, graphs
from hypothesis import given

from orthodim.graph import (
    Family,
    Graph,
    chromatic_number,
    clique_number,
    complement,
    complete_graph,
    connected_components,
    cycle_graph,
    find_cosimplicial_vertex,
    induced_subgraph,
    is_chordal,
    is_clique,
    is_independent,
    is_vertex_cover,
    min_vertex_cover,
    path_graph,
    recognize_family,
    star_graph,
)


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def test_cycle_shapes():
    c6 = cycle_graph(6)
    assert (c6.n, c6.num_edges) == (6, 6)
    assert c6.adj[0] == frozenset({1, 5})
    assert cycle_graph(3) == complete_graph(3)
    assert chromatic_number(cycle_graph(4)) == 2
    with pytest.raises(ValueError):
        cycle_graph(2)


def test_complement_examples():
    assert complement(complete_graph(3)).num_edges == 0
    assert complement(cycle_graph(6)).num_edges == 9
    assert complement(Graph.empty(2)) == complete_graph(2)


def test_induced_subgraph_examples():
    sub, old = induced_subgraph(cycle_graph(5), [0, 1, 2])
    assert sub == path_graph(3) and old == [0, 1, 2]
    g = cycle_graph(5)
    assert induced_subgraph(g, range(5))[0] == g
    assert induced_subgraph(complete_graph(4), [0, 1])[0] == complete_graph(2)


def test_clique_and_cover_predicates():
    k3 = complete_graph(3)
    assert is_vertex_cover(k3, {0, 1})
    assert not is_vertex_cover(k3, {0})
    assert is_vertex_cover(Graph.empty(4), set())
    assert is_clique(k3, [0, 1, 2]) and is_independent(Graph.empty(3), [0, 1, 2])


def test_min_vertex_cover_examples():
    vc = min_vertex_cover(cycle_graph(5), 5)
    assert len(vc) == 3 and is_vertex_cover(cycle_graph(5), vc)
    assert min_vertex_cover(Graph.empty(3), 0) == frozenset()
    assert min_vertex_cover(complete_graph(4), 2) is None


@given(graphs(max_n=8))
def test_min_vertex_cover_is_minimum(g):
    vc = min_vertex_cover(g, g.n)
    assert is_vertex_cover(g, vc)
    best = min(
        k for k in range(g.n + 1)
        if any(is_vertex_cover(g, s) for s in itertools.combinations(range(g.n), k))
    )
    assert len(vc) == best


def test_family_examples():
    ok, order = recognize_family(path_graph(4), Family.PATH)
    assert ok and sorted(order) == [0, 1, 2, 3]
    assert not recognize_family(cycle_graph(4), Family.SPLIT)[0]
    assert recognize_family(complete_graph(5), Family.COCHORDAL)[0]
    assert recognize_family(Graph.empty(3), Family.EMPTY)[0]
    assert not recognize_family(path_graph(2), Family.EMPTY)[0]


@given(graphs(max_n=8))
def test_split_witness_is_valid(g):
    ok, part = recognize_family(g, Family.SPLIT)
    brute = any(
        is_clique(g, c) and is_independent(g, [v for v in range(g.n) if v not in c])
        for k in range(g.n + 1)
        for c in itertools.combinations(range(g.n), k)
    )
    assert ok == brute
    if ok:
        clique, indep = part
        assert is_clique(g, clique) and is_independent(g, indep)
        assert sorted(clique + indep) == list(range(g.n))


@given(graphs(max_n=8))
def test_chordality_matches_networkx(g):
    assert is_chordal(g) == nx.is_chordal(to_nx(g))
    assert recognize_family(g, Family.COCHORDAL)[0] == nx.is_chordal(to_nx(complement(g)))


@given(graphs(max_n=8))
def test_union_families_componentwise(g):
    for union, base in ((Family.UNION_SPLIT, Family.SPLIT), (Family.UNION_COCHORDAL, Family.COCHORDAL)):
        expect = all(
            recognize_family(induced_subgraph(g, c)[0], base)[0] for c in connected_components(g)
        )
        assert recognize_family(g, union)[0] == expect


@given(graphs(max_n=8))
def test_path_recognition(g):
    ok, order = recognize_family(g, Family.PATH)
    h = to_nx(g)
    expect = g.n == 0 or (nx.is_connected(h) and g.num_edges == g.n - 1 and max(dict(h.degree).values(), default=0) <= 2)
    assert ok == expect
    if ok and g.n:
        assert all(g.has_edge(a, b) for a, b in zip(order, order[1:]))


def test_cosimplicial_examples():
    assert find_cosimplicial_vertex(complete_graph(4)) is not None
    assert find_cosimplicial_vertex(cycle_graph(5)) is None
    # x0's non-neighbors in the complement of C_6 are x1 and x5, which are adjacent there
    h = complement(cycle_graph(6))
    assert h.has_edge(1, 5)
    assert find_cosimplicial_vertex(h) is None


@given(graphs(max_n=8))
def test_cosimplicial_exists_on_cochordal(g):
    if recognize_family(g, Family.COCHORDAL)[0] and g.n:
        v = find_cosimplicial_vertex(g)
        assert v is not None
        assert is_independent(g, [w for w in range(g.n) if w != v and not g.has_edge(v, w)])


@given(graphs(max_n=6))
def test_chromatic_and_clique_numbers(g):
    assert chromatic_number(g) == brute_force_chi(g)
    assert clique_number(g) == (max(len(c) for c in nx.find_cliques(to_nx(g))) if g.n else 0)


def test_star_and_loops():
    s = star_graph(3)
    assert s.degree(0) == 3 and s.n == 4
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(1, 1)])
