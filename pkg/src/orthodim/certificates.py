"""Small NO-certificates for subspace choosability on split and cochordal graphs.

A certificate for a NO instance ``(G, L)`` is an induced sub-instance (same
subspaces on the kept vertices) that is itself NO. All tie-breaks pick the
smallest vertex index.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from math import comb, factorial

from .algebra import Field, Subspace, all_subspaces, gaussian_binomial, is_anisotropic
from .graph import Family, Graph, connected_components, find_cosimplicial_vertex, induced_subgraph, recognize_family
from .solver import SearchBudgetExceeded, SubChooseInstance, decide_subchoose, point_set

DEFAULT_RECURSION_BUDGET = 10**5


class CertificateError(RuntimeError):
    """Certificate extraction failed (for example the instance is YES)."""


@dataclass
class SubInstanceWitness:
    vertices: list[int]
    instance: SubChooseInstance
    bound: int

    @property
    def size(self) -> int:
        return len(self.vertices)

    def to_dict(self, verified: bool | None = None) -> dict:
        return {
            "vertices": self.vertices,
            "subspaces": {
                str(v): [[str(a) for a in row] for row in s.basis]
                for v, s in zip(self.vertices, self.instance.L)
            },
            "bound": self.bound,
            "verified": verified,
        }

    def to_json(self, verified: bool | None = None) -> str:
        return json.dumps(self.to_dict(verified), sort_keys=True)


def split_bound(d: int, q: int) -> int:
    return d + 2**d * gaussian_binomial(d, d // 2, q)


def anisotropic_split_bound(d: int) -> int:
    return d + 2**d * comb(d, d // 2)


def _require_no(inst: SubChooseInstance, budget=None):
    if decide_subchoose(inst, budget)[0]:
        raise CertificateError("instance is YES; it has no NO-certificate")


def _no_component(inst: SubChooseInstance, budget=None) -> list[int]:
    for comp in connected_components(inst.graph):
        sub, _ = inst.restrict(comp)
        if not decide_subchoose(sub, budget)[0]:
            return comp
    raise CertificateError("no NO component found")


def _witness(inst: SubChooseInstance, vertices, bound: int) -> SubInstanceWitness:
    sub, old = inst.restrict(vertices)
    return SubInstanceWitness(old, sub, bound)


def _split_parts(inst: SubChooseInstance, comp: list[int]) -> tuple[list[int], list[int]]:
    sub, old = induced_subgraph(inst.graph, comp)
    ok, part = recognize_family(sub, Family.SPLIT)
    if not ok:
        raise CertificateError("component is not a split graph")
    clique, indep = part
    return [old[v] for v in clique], [old[v] for v in indep]


def split_no_certificate(inst: SubChooseInstance, budget: int | None = None) -> SubInstanceWitness:
    """NO-certificate of size at most ``d + 2^d [d, floor(d/2)]_q`` for split components.

    On the first NO component with partition ``(C, I)``: if ``|C| > d`` return
    ``d + 1`` clique vertices; otherwise repeatedly delete the smallest-index
    ``v2`` in ``I`` having a twin ``v1`` (same neighborhood) with ``L(v1)``
    contained in ``L(v2)``.
    """
    if not inst.field.is_finite:
        raise ValueError("needs a finite field")
    d = inst.d
    bound = split_bound(d, inst.field.p)
    _require_no(inst, budget)
    comp = _no_component(inst, budget)
    clique, indep = _split_parts(inst, comp)
    if len(clique) > d:
        return _witness(inst, clique[: d + 1], bound)
    alive = list(indep)
    g, L = inst.graph, inst.L
    while True:
        victim = None
        for v2 in alive:
            if any(
                v1 != v2 and g.adj[v1] == g.adj[v2] and L[v1].is_subspace_of(L[v2]) for v1 in alive
            ):
                victim = v2
                break
        if victim is None:
            break
        alive.remove(victim)
    return _witness(inst, sorted(clique + alive), bound)


def _removable_anisotropic(inst: SubChooseInstance, w: int, alive: set[int], subspaces) -> bool:
    g, L = inst.graph, inst.L
    hood = g.adj[w] & alive
    twins = [v for v in alive if v != w and g.adj[v] & alive == hood]
    for q in subspaces:
        if all(q.meets_nontrivially(L[v]) for v in twins) and not q.meets_nontrivially(L[w]):
            return False
    return True


def split_no_certificate_anisotropic(inst: SubChooseInstance, budget: int | None = None) -> SubInstanceWitness:
    """NO-certificate of size at most ``d + 2^d C(d, floor(d/2))`` when ``F^d`` is anisotropic.

    A vertex ``w`` of ``I`` is deleted when every subspace ``Q`` meeting the
    subspace of each same-neighborhood vertex also meets ``L(w)``; the test
    enumerates all subspaces ``Q`` of ``F^d``.
    """
    f, d = inst.field, inst.d
    if not f.is_finite:
        raise ValueError("needs a finite field")
    if not is_anisotropic(f, d):
        raise ValueError(f"{f.name}^{d} has nonzero self-orthogonal vectors")
    bound = anisotropic_split_bound(d)
    _require_no(inst, budget)
    comp = _no_component(inst, budget)
    clique, indep = _split_parts(inst, comp)
    if len(clique) > d:
        return _witness(inst, clique[: d + 1], bound)
    subspaces = list(all_subspaces(f, d))
    alive = set(comp)
    changed = True
    while changed:
        changed = False
        for w in sorted(alive & set(indep)):
            if _removable_anisotropic(inst, w, alive, subspaces):
                alive.discard(w)
                changed = True
                break
    return _witness(inst, sorted(alive), bound)


def cochordal_no_certificate(
    inst: SubChooseInstance, budget: int | None = None, recursion_budget: int = DEFAULT_RECURSION_BUDGET
) -> SubInstanceWitness:
    """Recursive marking certificate for graphs whose components are cochordal.

    If some ``L(v)`` has only self-orthogonal vectors, mark ``v`` and stop.
    Otherwise take a NO component, mark a vertex ``v`` whose non-neighbors
    are independent, and for each non-self-orthogonal ``u`` in ``L(v)`` (one
    per scaling class) recurse on the instance with ``v`` and its
    non-neighbors ``w`` having ``u`` in ``L(w)`` removed, and with ``u^perp``
    intersected into the subspaces of ``v``'s neighbors.
    """
    f, d = inst.field, inst.d
    if not f.is_finite:
        raise ValueError("needs a finite field")
    ok, _ = recognize_family(inst.graph, Family.UNION_COCHORDAL)
    if not ok:
        raise ValueError("graph is not a union of cochordal graphs")
    _require_no(inst, budget)
    ps = point_set(f, d)
    g = inst.graph
    calls = 0

    def mark(vertices: list[int], L: dict[int, Subspace]) -> set[int]:
        nonlocal calls
        calls += 1
        if calls > recursion_budget:
            raise SearchBudgetExceeded(f"marking recursion exceeded {recursion_budget} calls")
        for v in vertices:
            if ps.mask_of(L[v]) == 0:
                return {v}
        cur = SubChooseInstance(
            induced_subgraph(g, vertices)[0], d, f, tuple(L[v] for v in vertices)
        )
        comp = None
        for c in connected_components(cur.graph):
            sub, _ = cur.restrict(c)
            if not decide_subchoose(sub, budget)[0]:
                comp = [vertices[i] for i in c]
                break
        if comp is None:
            raise CertificateError("recursive instance is YES")
        cg, old = induced_subgraph(g, comp)
        v = old[find_cosimplicial_vertex(cg)]
        marked = {v}
        mask = ps.mask_of(L[v])
        for idx, u in enumerate(ps.points):
            if not mask >> idx & 1:
                continue
            u_perp = Subspace.span(f, [u], d).complement()
            keep, newL = [], {}
            for w in comp:
                if w == v:
                    continue
                if w in g.adj[v]:
                    keep.append(w)
                    newL[w] = L[w].intersect(u_perp)
                elif not L[w].contains(u):
                    keep.append(w)
                    newL[w] = L[w]
            if not keep:
                raise CertificateError("branch instance is empty, so the input was YES")
            marked |= mark(keep, newL)
        return marked

    verts = list(range(g.n))
    marked = mark(verts, {v: inst.L[v] for v in verts})
    bound = factorial(f.p**d)
    return _witness(inst, sorted(marked), bound)


def build_irreducible_split_instance(d: int, field: Field) -> SubChooseInstance:
    """Clique ``c_0..c_{d-1}`` with full subspaces plus one independent vertex per
    ``floor(d/2)``-subset ``S`` of the clique, adjacent to ``S`` and restricted to
    ``span(e_0..e_{floor(d/2)-1})``.
    """
    if d < 2:
        raise ValueError("d must be at least 2")
    half = d // 2
    subsets = list(itertools.combinations(range(d), half))
    edges = list(itertools.combinations(range(d), 2))
    for j, s in enumerate(subsets):
        edges.extend((i, d + j) for i in s)
    g = Graph.from_edges(d + len(subsets), edges)
    full = Subspace.full(field, d)
    w = Subspace.span(field, [field.unit_vector(d, i) for i in range(half)], d)
    return SubChooseInstance(g, d, field, tuple([full] * d + [w] * len(subsets)))


def is_sub_instance(inst: SubChooseInstance, vertices, sub: SubChooseInstance) -> bool:
    vertices = list(vertices)
    if vertices != sorted(set(vertices)) or any(not 0 <= v < inst.graph.n for v in vertices):
        return False
    expected, _ = inst.restrict(vertices)
    return expected.graph == sub.graph and expected.L == sub.L and sub.d == inst.d and sub.field == inst.field


def verify_certificate(
    inst: SubChooseInstance, witness: SubInstanceWitness, budget: int | None = None
) -> bool | None:
    """Sub-instance contract, NO-ness, and size bound. ``None`` if the search runs out of budget."""
    if not is_sub_instance(inst, witness.vertices, witness.instance):
        return False
    if witness.size > witness.bound:
        return False
    try:
        return not decide_subchoose(witness.instance, budget)[0]
    except SearchBudgetExceeded:
        return None
