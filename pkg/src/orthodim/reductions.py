"""From 3-coloring (or d-coloring) to orthogonality dimension via the co-cycle gadget.

The gadget is the complement of the cycle ``C_{2d}``. In any ``d``-dimensional
orthogonal representation of it, the vectors on two cycle-adjacent vertices
``x0, x1`` are orthogonal or proportional. Gluing ``x0`` to a palette vertex
``z_i`` and ``x1`` to an original vertex ``v`` therefore forces ``u_v`` to be
either parallel or perpendicular to ``u_{z_i}``.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Literal

from .algebra import Field, are_proportional, inner_product, rref
from .graph import Family, Graph, complement, cycle_graph, induced_subgraph, is_vertex_cover, recognize_family
from .solver import OrthRep, iter_orthreps, is_proper_coloring, verify_orthrep


@dataclass(frozen=True)
class GadgetHandle:
    graph: Graph
    x0: int
    x1: int
    d: int


def gadget_graph(d: int) -> GadgetHandle:
    if d < 3:
        raise ValueError("the gadget needs d >= 3")
    return GadgetHandle(complement(cycle_graph(2 * d)), 0, 1, d)


def gadget_coloring(d: int, mode: Literal["same", "distinct"]) -> list[int]:
    """A proper ``d``-coloring of the gadget, listed along the cycle order.

    ``same`` pairs cycle vertices ``(2i, 2i+1)`` so ``x0, x1`` share color 0;
    ``distinct`` pairs ``(2i-1, 2i)`` so they get colors 0 and 1.
    """
    if d < 3:
        raise ValueError("the gadget needs d >= 3")
    if mode == "same":
        return [i // 2 for i in range(2 * d)]
    if mode == "distinct":
        return [((i + 1) // 2) % d for i in range(2 * d)]
    raise ValueError(f"unknown mode {mode!r}")


def gadget_dichotomy_holds(field: Field, u0, u1) -> bool:
    return inner_product(field, u0, u1) == 0 or are_proportional(field, u0, u1)


def verify_gadget_property(d: int, field: Field, budget: int | None = None) -> bool:
    """Exhaustively check the orthogonal-or-proportional dichotomy at ``(x0, x1)``."""
    return gadget_counterexamples(d, field, budget)[1] == 0


def gadget_counterexamples(d: int, field: Field, budget: int | None = None) -> tuple[int, int]:
    """``(representations enumerated, counterexamples)`` over projective representatives."""
    h = gadget_graph(d)
    total = bad = 0
    for rep in iter_orthreps(h.graph, d, field, budget):
        total += 1
        if not gadget_dichotomy_holds(field, rep[h.x0], rep[h.x1]):
            bad += 1
    return total, bad


@dataclass
class ReductionOutput:
    """Result of gluing gadgets onto a coloring instance.

    Original vertices keep their indices ``0..n_orig-1``; the palette
    ``z_0..z_{d-1}`` follows, then the fresh gadget vertices. ``gadgets[(i, v)]``
    lists the ``2d`` vertices of the gadget copy joining ``z_i`` and ``v`` in
    cycle order.
    """

    graph: Graph
    modulator: list[int]
    d: int
    n_orig: int
    source_modulator: list[int]
    palette: list[int]
    gadgets: dict[tuple[int, int], list[int]]
    kind: str
    path: list[int] | None = None

    def embeds(self) -> dict:
        return {
            "original": list(range(self.n_orig)),
            "palette": self.palette,
            "gadgets": {f"{i},{v}": vs for (i, v), vs in sorted(self.gadgets.items())},
        }

    def to_json(self) -> str:
        return json.dumps(
            {
                "kind": self.kind,
                "d": self.d,
                "n_orig": self.n_orig,
                "modulator": self.modulator,
                "source_modulator": self.source_modulator,
                "path": self.path,
                "embeds": self.embeds(),
            },
            sort_keys=True,
        )


def modulator_size(k: int, d: int) -> int:
    return k + d + d * k * (2 * d - 2)


def _glue(g: Graph, x: list[int], d: int) -> tuple[Graph, list[int], dict]:
    n = g.n
    edges = list(g.edges())
    palette = list(range(n, n + d))
    edges.extend(itertools.combinations(palette, 2))
    h = complement(cycle_graph(2 * d))
    nxt = n + d
    gadgets = {}
    for i in range(d):
        for v in x:
            ids = [palette[i], v] + list(range(nxt, nxt + 2 * d - 2))
            nxt += 2 * d - 2
            edges.extend((ids[a], ids[b]) for a, b in h.edges())
            gadgets[(i, v)] = ids
    return Graph.from_edges(nxt, edges), palette, gadgets


def col_to_od_vc(g: Graph, x, d: int) -> ReductionOutput:
    """``chi(G) <= d`` iff ``od(G') <= d``, with a vertex cover of size ``k + d + dk(2d-2)``."""
    if d < 3:
        raise ValueError("the transformation needs d >= 3")
    x = sorted(set(x))
    if not is_vertex_cover(g, x):
        raise ValueError("x is not a vertex cover of g")
    out, palette, gadgets = _glue(g, x, d)
    mod = sorted(set(x) | set(range(g.n, out.n)))
    return ReductionOutput(out, mod, d, g.n, x, palette, gadgets, "vc")


def col_to_od_path(g: Graph, x) -> ReductionOutput:
    """The ``d = 3`` construction for a modulator ``X`` with ``G - X`` a path."""
    x = sorted(set(x))
    rest, old = induced_subgraph(g, [v for v in range(g.n) if v not in set(x)])
    ok, order = recognize_family(rest, Family.PATH)
    if not ok:
        raise ValueError("g minus x is not a path")
    out, palette, gadgets = _glue(g, x, 3)
    mod = sorted(set(x) | set(range(g.n, out.n)))
    return ReductionOutput(out, mod, 3, g.n, x, palette, gadgets, "path", [old[v] for v in order])


def _coordinates(field: Field, basis: list, v) -> list:
    """Coefficients of ``v`` in ``basis`` (which must span the space)."""
    d = len(v)
    aug = [[basis[j][i] for j in range(len(basis))] + [v[i]] for i in range(d)]
    rows, piv = rref(field, aug, len(basis) + 1)
    if len(basis) in piv:
        raise ValueError("vector outside the span of the palette")
    coeffs = [field(0)] * len(basis)
    for row, c in zip(rows, piv):
        coeffs[c] = row[-1]
    return coeffs


def extract_coloring_from_orthrep(out: ReductionOutput, rep: OrthRep) -> list[int]:
    """Recover a proper ``d``-coloring of the original graph from a representation of ``G'``.

    Modulator vertices get the index of the palette vector they are parallel
    to. Outside vertices of the vertex-cover variant take the smallest color
    free among their neighbors; along the path variant, vertex ``v_j`` takes
    the smallest ``i`` with nonzero palette coefficient that differs from the
    color of ``v_{j-1}``.
    """
    ok, bad = verify_orthrep(out.graph, rep)
    if not ok:
        raise ValueError(f"not an orthogonal representation: {bad}")
    field, d = rep.field, out.d
    zvec = [rep[z] for z in out.palette]
    colors = [-1] * out.n_orig
    for v in out.source_modulator:
        hits = [i for i, z in enumerate(zvec) if are_proportional(field, rep[v], z)]
        if len(hits) != 1:
            raise AssertionError(f"vertex {v} is parallel to {len(hits)} palette vectors")
        colors[v] = hits[0]
    g = induced_subgraph(out.graph, range(out.n_orig))[0]
    if out.kind == "path":
        prev = None
        for v in out.path:
            alpha = _coordinates(field, zvec, rep[v])
            cands = [i for i in range(d) if alpha[i] != 0 and i != prev]
            colors[v] = cands[0]
            prev = colors[v]
    else:
        for v in range(out.n_orig):
            if colors[v] < 0:
                taken = {colors[w] for w in g.adj[v]}
                colors[v] = min(c for c in range(d) if c not in taken)
    if not is_proper_coloring(g, colors):
        raise AssertionError("extracted coloring is not proper")
    return colors


def extend_coloring(out: ReductionOutput, coloring: list[int]) -> list[int]:
    """Extend a proper ``d``-coloring of the original graph to all of ``G'``."""
    d = out.d
    colors = list(coloring) + [-1] * (out.graph.n - out.n_orig)
    for i, z in enumerate(out.palette):
        colors[z] = i
    same, distinct = gadget_coloring(d, "same"), gadget_coloring(d, "distinct")
    for (i, v), ids in out.gadgets.items():
        a, b = i, coloring[v]
        base = same if a == b else distinct
        # relabel the template so x0 gets a and x1 gets b
        perm = {base[0]: a, base[1]: b}
        spare = iter(c for c in range(d) if c not in (a, b))
        for c in range(d):
            if c not in perm:
                perm[c] = next(spare)
        for pos, vid in enumerate(ids):
            colors[vid] = perm[base[pos]]
    return colors
