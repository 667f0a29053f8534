from math import comb

import pytest

from orthodim.algebra import GF2, GF3, Subspace, gaussian_binomial
from orthodim.certificates import (
    CertificateError,
    SubInstanceWitness,
    anisotropic_split_bound,
    build_irreducible_split_instance,
    cochordal_no_certificate,
    is_sub_instance,
    split_bound,
    split_no_certificate,
    split_no_certificate_anisotropic,
    verify_certificate,
)
from orthodim.graph import Family, Graph, complete_graph, recognize_family
from orthodim.harness import random_no_instance, trial_rngs
from orthodim.solver import SubChooseInstance, decide_subchoose


def full(f, d, n):
    return (Subspace.full(f, d),) * n


def test_bounds():
    assert split_bound(2, 2) == 2 + 4 * gaussian_binomial(2, 1, 2) == 14
    assert anisotropic_split_bound(2) == 10
    assert anisotropic_split_bound(3) == 3 + 8 * comb(3, 1)


def test_split_clique_case():
    inst = SubChooseInstance(complete_graph(3), 2, GF2, full(GF2, 2, 3))
    wit = split_no_certificate(inst)
    assert wit.vertices == [0, 1, 2]
    assert verify_certificate(inst, wit)


def test_split_twin_removal():
    base = build_irreducible_split_instance(2, GF2)
    # duplicate vertex 2 (adjacent to clique vertex 0) as vertex 4 with the same subspace
    edges = list(base.graph.edges()) + [(0, 4)]
    g = Graph.from_edges(5, edges)
    inst = SubChooseInstance(g, 2, GF2, base.L + (base.L[2],))
    wit = split_no_certificate(inst)
    # equal subspaces make both twins removable; the smaller index goes first
    assert wit.vertices == [0, 1, 3, 4]
    assert verify_certificate(inst, wit)


def test_split_irreducible_unchanged():
    inst = build_irreducible_split_instance(2, GF2)
    assert split_no_certificate(inst).vertices == list(range(inst.graph.n))


def test_yes_instance_has_no_certificate():
    inst = SubChooseInstance(complete_graph(2), 2, GF2, full(GF2, 2, 2))
    with pytest.raises(CertificateError):
        split_no_certificate(inst)


def test_anisotropic_superset_removal():
    # K_1 clique {0}, twins 1 and 2 adjacent to 0; L(2) contains L(1)
    g = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    e0 = Subspace.span(GF3, [(1, 0)], 2)
    e1 = Subspace.span(GF3, [(0, 1)], 2)
    inst = SubChooseInstance(g, 2, GF3, (e0, e0, Subspace.full(GF3, 2), e1))
    wit = split_no_certificate_anisotropic(inst)
    assert 2 not in wit.vertices
    assert verify_certificate(inst, wit)


def test_anisotropic_requires_anisotropy():
    inst = SubChooseInstance(complete_graph(3), 2, GF2, full(GF2, 2, 3))
    with pytest.raises(ValueError):
        split_no_certificate_anisotropic(inst)


def test_anisotropic_random_instances():
    for rng in trial_rngs(11, 15):
        inst = random_no_instance(rng, Family.SPLIT, GF3, 2)
        wit = split_no_certificate_anisotropic(inst)
        assert wit.size <= 10 and verify_certificate(inst, wit)


def test_cochordal_examples():
    one = SubChooseInstance(Graph.empty(1), 2, GF2, (Subspace.span(GF2, [(1, 1)], 2),))
    assert cochordal_no_certificate(one).vertices == [0]
    k3 = SubChooseInstance(complete_graph(3), 2, GF2, full(GF2, 2, 3))
    wit = cochordal_no_certificate(k3)
    assert verify_certificate(k3, wit)


@pytest.mark.parametrize("f", [GF2, GF3])
@pytest.mark.parametrize("d", [2, 3])
def test_cochordal_agrees_on_split_instances(f, d):
    for rng in trial_rngs(3 + d, 10):
        inst = random_no_instance(rng, Family.SPLIT, f, d)
        assert verify_certificate(inst, split_no_certificate(inst))
        assert verify_certificate(inst, cochordal_no_certificate(inst))


def test_cochordal_rejects_other_graphs():
    from orthodim.graph import cycle_graph

    inst = SubChooseInstance(cycle_graph(5), 2, GF2, full(GF2, 2, 5))
    assert not recognize_family(inst.graph, Family.UNION_COCHORDAL)[0]
    with pytest.raises(ValueError):
        cochordal_no_certificate(inst)


@pytest.mark.parametrize("f", [GF2, GF3])
@pytest.mark.parametrize("d", [2, 3])
def test_irreducible_instance(f, d):
    inst = build_irreducible_split_instance(d, f)
    assert inst.graph.n == d + comb(d, d // 2)
    assert not decide_subchoose(inst)[0]
    for v in range(inst.graph.n):
        sub, _ = inst.restrict([w for w in range(inst.graph.n) if w != v])
        assert decide_subchoose(sub)[0]


def test_verify_negative_controls():
    inst = build_irreducible_split_instance(2, GF2)
    yes_sub, old = inst.restrict([0, 1, 2])
    assert verify_certificate(inst, SubInstanceWitness(old, yes_sub, 100)) is False
    wit = split_no_certificate(inst)
    assert verify_certificate(inst, SubInstanceWitness(wit.vertices, wit.instance, 1)) is False
    other, _ = inst.restrict([0, 1, 3])
    assert not is_sub_instance(inst, [0, 1, 2], other)


def test_witness_json():
    import json

    inst = build_irreducible_split_instance(2, GF2)
    wit = split_no_certificate(inst)
    data = json.loads(wit.to_json(True))
    assert data["vertices"] == [0, 1, 2, 3] and data["verified"] is True
    assert data["subspaces"]["2"] == [["1", "0"]]
