import hypothesis.strategies as st
import pytest
from conftest import brute_force_chi, graphs
from hypothesis import given

from orthodim.algebra import GF2, GF3
from orthodim.graph import (
    Family,
    Graph,
    complete_graph,
    cycle_graph,
    induced_subgraph,
    is_clique,
    min_vertex_cover,
    path_graph,
    recognize_family,
    remove_vertices,
)
from orthodim.io import gen_random
from orthodim.reductions import (
    col_to_od_path,
    col_to_od_vc,
    extend_coloring,
    extract_coloring_from_orthrep,
    gadget_coloring,
    gadget_counterexamples,
    gadget_dichotomy_holds,
    gadget_graph,
    modulator_size,
)
from orthodim.solver import coloring_to_orthrep, decide_coloring, decide_od, is_proper_coloring


def test_gadget_shape():
    h = gadget_graph(3)
    assert (h.graph.n, h.graph.num_edges) == (6, 9)
    assert is_clique(h.graph, [0, 2, 4])
    assert not h.graph.has_edge(h.x0, h.x1)
    assert gadget_graph(4).graph.num_edges == 20
    with pytest.raises(ValueError):
        gadget_graph(2)


def test_gadget_coloring_examples():
    assert gadget_coloring(3, "same") == [0, 0, 1, 1, 2, 2]
    assert gadget_coloring(3, "distinct") == [0, 1, 1, 2, 2, 0]
    assert gadget_coloring(4, "same") == [0, 0, 1, 1, 2, 2, 3, 3]


@pytest.mark.parametrize("d", [3, 4, 5, 6])
def test_gadget_colorings_proper(d):
    h = gadget_graph(d).graph
    same, distinct = gadget_coloring(d, "same"), gadget_coloring(d, "distinct")
    assert is_proper_coloring(h, same) and is_proper_coloring(h, distinct)
    assert same[0] == same[1] and distinct[0] != distinct[1]
    assert max(same) < d and max(distinct) < d


@pytest.mark.parametrize("d,f", [(3, GF2), (3, GF3), (4, GF2), (4, GF3)])
def test_gadget_dichotomy_small(d, f):
    total, bad = gadget_counterexamples(d, f)
    assert total > 0 and bad == 0


def test_dichotomy_predicate():
    assert gadget_dichotomy_holds(GF3, (1, 0, 0), (0, 1, 0))
    assert gadget_dichotomy_holds(GF3, (1, 1, 0), (2, 2, 0))
    assert not gadget_dichotomy_holds(GF3, (1, 0, 0), (1, 1, 0))


def test_modulator_size_examples():
    assert modulator_size(2, 3) == 29
    out = col_to_od_vc(complete_graph(3), [0, 1], 3)
    assert len(out.modulator) == 29
    assert modulator_size(1, 3) == 16


def test_vc_reduction_examples():
    k3 = col_to_od_vc(complete_graph(3), [0, 1], 3)
    assert decide_od(k3.graph, 3, GF2)[0]
    k4 = col_to_od_vc(complete_graph(4), [0, 1, 2], 3)
    assert not decide_od(k4.graph, 3, GF2)[0]


def test_vc_reduction_structure():
    g = cycle_graph(5)
    out = col_to_od_vc(g, [0, 1, 3], 3)
    assert induced_subgraph(out.graph, range(5))[0] == g
    assert is_clique(out.graph, out.palette)
    assert recognize_family(remove_vertices(out.graph, out.modulator)[0], Family.EMPTY)[0]
    h = gadget_graph(3).graph
    for (i, v), ids in out.gadgets.items():
        assert ids[0] == out.palette[i] and ids[1] == v
        assert induced_subgraph(out.graph, ids, keep_order=True)[0] == h
    with pytest.raises(ValueError):
        col_to_od_vc(g, [0, 1], 3)


@given(graphs(max_n=5), st.sampled_from([GF2, GF3]))
def test_vc_reduction_equivalence(g, f):
    x = sorted(min_vertex_cover(g, g.n))
    out = col_to_od_vc(g, x, 3)
    assert len(out.modulator) == modulator_size(len(x), 3)
    assert decide_od(out.graph, 3, f)[0] == (brute_force_chi(g) <= 3)


def test_path_reduction_example():
    # C_5 as the path 0-1-2-3 plus the apex 4
    g = cycle_graph(5)
    out = col_to_od_path(g, [4])
    assert len(out.modulator) == 16
    ok, rep = decide_od(out.graph, 3, GF2)
    assert ok
    assert is_proper_coloring(g, extract_coloring_from_orthrep(out, rep))
    rest = remove_vertices(out.graph, out.modulator)[0]
    assert recognize_family(rest, Family.PATH)[0]
    with pytest.raises(ValueError):
        col_to_od_path(complete_graph(4), [0])


@given(st.integers(2, 7), st.integers(1, 3), st.integers(0, 2**32), st.sampled_from([GF2, GF3]))
def test_path_reduction_equivalence(n, k, seed, f):
    k = min(k, n)
    inst = gen_random(n, k, Family.PATH, 0.5, seed)
    out = col_to_od_path(inst.graph, inst.modulator)
    assert recognize_family(remove_vertices(out.graph, out.modulator)[0], Family.PATH)[0]
    ok, rep = decide_od(out.graph, 3, f)
    assert ok == (brute_force_chi(inst.graph) <= 3)
    if ok:
        assert is_proper_coloring(inst.graph, extract_coloring_from_orthrep(out, rep))


def test_extract_from_k3_witness():
    out = col_to_od_vc(complete_graph(3), [0, 1], 3)
    ok, rep = decide_od(out.graph, 3, GF2)
    col = extract_coloring_from_orthrep(out, rep)
    assert sorted(col) == [0, 1, 2]


def test_extract_from_edgeless():
    g = Graph.empty(3)
    out = col_to_od_vc(g, [], 3)
    ok, rep = decide_od(out.graph, 3, GF3)
    assert ok and is_proper_coloring(g, extract_coloring_from_orthrep(out, rep))


@given(graphs(min_n=1, max_n=6), st.sampled_from([GF2, GF3]))
def test_coloring_round_trip(g, f):
    ok, col = decide_coloring(g, 3)
    if not ok:
        return
    x = sorted(min_vertex_cover(g, g.n))
    out = col_to_od_vc(g, x, 3)
    full = extend_coloring(out, col)
    assert is_proper_coloring(out.graph, full)
    rep = coloring_to_orthrep(out.graph, full, f, 3)
    back = extract_coloring_from_orthrep(out, rep)
    assert is_proper_coloring(g, back)
    assert all(back[v] == col[v] for v in x)
