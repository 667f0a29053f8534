"""Exact deciders for orthogonal representations over finite fields.

All searches run over projective representatives (first nonzero entry 1) of
the non-self-orthogonal vectors: scaling a vector by a nonzero constant
changes neither its self-orthogonality nor any orthogonality relation.
Domains are bitmasks over that list, and the search is plain backtracking
with forward checking and singleton propagation. Decisions do not depend on
the variable order; witnesses may.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence

from .algebra import (
    Field,
    Subspace,
    enumerate_nonselforth_vectors,
    exists_nonselforth_in_complement,
    inner_product,
    is_self_orthogonal,
)
from .algebra.field import Vector
from .graph import Graph, connected_components, induced_subgraph, is_vertex_cover

DEFAULT_NODE_BUDGET = 10**8


class SearchBudgetExceeded(RuntimeError):
    """A backtracking search visited more nodes than its budget allows."""


@dataclass(frozen=True)
class OrthRep:
    """Vertex-to-vector assignment claimed to be an orthogonal representation."""

    field: Field
    d: int
    vectors: Mapping[int, Vector]

    def __getitem__(self, v: int) -> Vector:
        return self.vectors[v]

    def padded(self, extra: int = 1) -> OrthRep:
        """Append ``extra`` zero coordinates to every vector."""
        z = (self.field(0),) * extra
        return OrthRep(self.field, self.d + extra, {v: u + z for v, u in self.vectors.items()})


@dataclass(frozen=True)
class Violation:
    kind: str  # "missing", "dimension", "self-orthogonal" or "edge"
    vertices: tuple[int, ...]


def verify_orthrep(g: Graph, rep: OrthRep) -> tuple[bool, Violation | None]:
    """Check every vertex vector and every edge; report the first violation."""
    for v in range(g.n):
        if v not in rep.vectors:
            return False, Violation("missing", (v,))
        if len(rep.vectors[v]) != rep.d:
            return False, Violation("dimension", (v,))
    for v in range(g.n):
        if is_self_orthogonal(rep.field, rep.vectors[v]):
            return False, Violation("self-orthogonal", (v,))
    for u, v in g.edges():
        if inner_product(rep.field, rep.vectors[u], rep.vectors[v]) != 0:
            return False, Violation("edge", (u, v))
    return True, None


# --------------------------------------------------------------------------
# search engine


@dataclass(frozen=True)
class PointSet:
    """Projective non-self-orthogonal vectors of ``field^d`` with orthogonality masks."""

    field: Field
    d: int
    points: tuple[Vector, ...]
    orth: tuple[int, ...]  # orth[i] has bit j set iff points i and j are orthogonal

    @property
    def full_mask(self) -> int:
        return (1 << len(self.points)) - 1

    def mask_of(self, subspace: Subspace) -> int:
        return sum(1 << i for i, p in enumerate(self.points) if subspace.contains(p))


@functools.lru_cache(maxsize=64)
def point_set(field: Field, d: int, cap: int | None = None) -> PointSet:
    if not field.is_finite:
        raise ValueError("exhaustive search needs a finite field")
    pts = tuple(enumerate_nonselforth_vectors(field, d, cap))
    orth = tuple(
        sum(1 << j for j, q in enumerate(pts) if inner_product(field, p, q) == 0) for p in pts
    )
    return PointSet(field, d, pts, orth)


class _Budget:
    def __init__(self, limit: int | None):
        self.limit = DEFAULT_NODE_BUDGET if limit is None else limit
        self.used = 0

    def tick(self):
        self.used += 1
        if self.used > self.limit:
            raise SearchBudgetExceeded(f"search exceeded {self.limit} nodes")


def _propagate(nbrs, domains, compat, queue) -> bool:
    while queue:
        v = queue.pop()
        allowed = compat[domains[v].bit_length() - 1]
        for w in nbrs[v]:
            dw = domains[w]
            nd = dw & allowed
            if nd != dw:
                if not nd:
                    return False
                domains[w] = nd
                if nd & (nd - 1) == 0:
                    queue.append(w)
    return True


def _search(nbrs, domains, compat, budget: _Budget) -> Iterator[list[int]]:
    """Yield complete assignments (one bitmask per vertex, single bit each)."""
    budget.tick()
    best, best_key = -1, None
    for v, dom in enumerate(domains):
        size = dom.bit_count()
        if size > 1:
            key = (size, -len(nbrs[v]))
            if best_key is None or key < best_key:
                best, best_key = v, key
    if best < 0:
        yield domains
        return
    dom = domains[best]
    while dom:
        bit = dom & -dom
        dom ^= bit
        trial = list(domains)
        trial[best] = bit
        if _propagate(nbrs, trial, compat, [best]):
            yield from _search(nbrs, trial, compat, budget)


def solve_domains(
    g: Graph, domains: Sequence[int], compat: Sequence[int], budget: int | None = None
) -> list[int] | None:
    """One solution of the binary CSP "adjacent vertices take compatible values".

    ``domains[v]`` is a bitmask of allowed values and ``compat[c]`` the mask of
    values compatible with value ``c`` on an edge. Returns a value index per
    vertex, or ``None``. Components are solved independently.
    """
    tracker = _Budget(budget)
    values = [-1] * g.n
    for comp in connected_components(g):
        sub, old = induced_subgraph(g, comp)
        nbrs = [list(sub.adj[v]) for v in range(sub.n)]
        doms = [domains[v] for v in old]
        if any(dm == 0 for dm in doms):
            return None
        queue = [v for v, dm in enumerate(doms) if dm & (dm - 1) == 0]
        if not _propagate(nbrs, doms, compat, queue):
            return None
        sol = next(_search(nbrs, doms, compat, tracker), None)
        if sol is None:
            return None
        for i, v in enumerate(old):
            values[v] = sol[i].bit_length() - 1
    return values


def iter_solutions(
    g: Graph, domains: Sequence[int], compat: Sequence[int], budget: int | None = None
) -> Iterator[list[int]]:
    """Every solution of the CSP described in :func:`solve_domains`."""
    tracker = _Budget(budget)
    nbrs = [list(g.adj[v]) for v in range(g.n)]
    doms = list(domains)
    if any(dm == 0 for dm in doms):
        return
    queue = [v for v, dm in enumerate(doms) if dm & (dm - 1) == 0]
    if not _propagate(nbrs, doms, compat, queue):
        return
    for sol in _search(nbrs, doms, compat, tracker):
        yield [dm.bit_length() - 1 for dm in sol]


# --------------------------------------------------------------------------
# orthogonality dimension


def decide_od(
    g: Graph, d: int, field: Field, budget: int | None = None, cap: int | None = None
) -> tuple[bool, OrthRep | None]:
    """Does ``g`` have a ``d``-dimensional orthogonal representation over ``field``?"""
    if d < 1:
        return g.n == 0, (OrthRep(field, d, {}) if g.n == 0 else None)
    ps = point_set(field, d, cap)
    values = solve_domains(g, [ps.full_mask] * g.n, ps.orth, budget)
    if values is None:
        return False, None
    return True, OrthRep(field, d, {v: ps.points[c] for v, c in enumerate(values)})


def iter_orthreps(
    g: Graph, d: int, field: Field, budget: int | None = None, cap: int | None = None
) -> Iterator[OrthRep]:
    """All orthogonal representations of ``g`` up to per-vertex scaling."""
    ps = point_set(field, d, cap)
    for values in iter_solutions(g, [ps.full_mask] * g.n, ps.orth, budget):
        yield OrthRep(field, d, {v: ps.points[c] for v, c in enumerate(values)})


def fpt_decide_vc(
    g: Graph, x, d: int, field: Field, budget: int | None = None, cap: int | None = None
) -> bool:
    """Decide ``od(g) <= d`` through enumeration on a vertex cover ``x``.

    Accepts outright when ``d > |x|`` (the graph is then ``(|x|+1)``-colorable).
    Otherwise every orthogonal representation of ``g[x]`` is tried, and an
    outside vertex is satisfiable iff some non-self-orthogonal vector is
    orthogonal to all of its (cover) neighbors.
    """
    x = sorted(set(x))
    if not is_vertex_cover(g, x):
        raise ValueError("x is not a vertex cover of g")
    if d > len(x):
        return True
    ps = point_set(field, d, cap)
    sub, old = induced_subgraph(g, x)
    pos = {v: i for i, v in enumerate(old)}
    outside = [sorted(pos[w] for w in g.adj[v]) for v in range(g.n) if v not in pos]
    # one check per distinct neighborhood, cached on the chosen point indices
    hoods = sorted(set(map(tuple, outside)))
    cache: dict[tuple[int, ...], bool] = {}
    for values in iter_solutions(sub, [ps.full_mask] * sub.n, ps.orth, budget):
        ok = True
        for hood in hoods:
            key = tuple(sorted({values[i] for i in hood}))
            if key not in cache:
                cache[key] = exists_nonselforth_in_complement(field, [ps.points[c] for c in key], d)[0]
            if not cache[key]:
                ok = False
                break
        if ok:
            return True
    return False


# --------------------------------------------------------------------------
# subspace choosability


@dataclass(frozen=True)
class SubChooseInstance:
    """A graph with a subspace ``L[v]`` of ``field^d`` attached to each vertex."""

    graph: Graph
    d: int
    field: Field
    L: tuple[Subspace, ...]

    def __post_init__(self):
        if len(self.L) != self.graph.n:
            raise ValueError("need exactly one subspace per vertex")
        if any(s.d != self.d for s in self.L):
            raise ValueError("subspace ambient dimension differs from d")

    def restrict(self, vertices) -> tuple[SubChooseInstance, list[int]]:
        """Sub-instance induced by ``vertices`` (new index ``i`` is ``old[i]``)."""
        sub, old = induced_subgraph(self.graph, vertices)
        return SubChooseInstance(sub, self.d, self.field, tuple(self.L[v] for v in old)), old


def decide_subchoose(
    inst: SubChooseInstance, budget: int | None = None, cap: int | None = None
) -> tuple[bool, OrthRep | None]:
    """Is there an orthogonal representation with ``u_v`` in ``L[v]`` for all ``v``?"""
    ps = point_set(inst.field, inst.d, cap)
    domains = [ps.mask_of(s) for s in inst.L]
    values = solve_domains(inst.graph, domains, ps.orth, budget)
    if values is None:
        return False, None
    return True, OrthRep(inst.field, inst.d, {v: ps.points[c] for v, c in enumerate(values)})


# --------------------------------------------------------------------------
# coloring


def is_proper_coloring(g: Graph, coloring: Sequence[int]) -> bool:
    return len(coloring) == g.n and all(coloring[u] != coloring[v] for u, v in g.edges())


def decide_coloring(g: Graph, q: int, budget: int | None = None) -> tuple[bool, list[int] | None]:
    """Proper ``q``-coloring by DSATUR-ordered backtracking.

    Colors are opened in order (a vertex may use at most one color beyond
    those already in use), which removes color-permutation symmetry.
    """
    if q < 1:
        raise ValueError("q must be at least 1")
    tracker = _Budget(budget)
    colors = [-1] * g.n

    def pick():
        best, key = -1, None
        for v in range(g.n):
            if colors[v] < 0:
                sat = len({colors[w] for w in g.adj[v] if colors[w] >= 0})
                k = (-sat, -g.degree(v), v)
                if key is None or k < key:
                    best, key = v, k
        return best

    def go(used: int) -> bool:
        tracker.tick()
        v = pick()
        if v < 0:
            return True
        taken = {colors[w] for w in g.adj[v]}
        for c in range(min(used + 1, q)):
            if c not in taken:
                colors[v] = c
                if go(max(used, c + 1)):
                    return True
                colors[v] = -1
        return False

    if go(0):
        return True, colors
    return False, None


def coloring_to_orthrep(g: Graph, coloring: Sequence[int], field: Field, q: int | None = None) -> OrthRep:
    """Send color ``c`` to the unit vector ``e_c`` of ``field^q``."""
    if not is_proper_coloring(g, coloring):
        raise ValueError("coloring is not proper")
    if q is None:
        q = max(coloring, default=-1) + 1
    if any(not 0 <= c < q for c in coloring):
        raise ValueError(f"colors must lie in range({q})")
    return OrthRep(field, q, {v: field.unit_vector(q, c) for v, c in enumerate(coloring)})
