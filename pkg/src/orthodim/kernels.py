"""Kernelization for deciding ``od_F(G) <= d`` with a modulator ``X``.

Every kernel returns a :class:`Kernel`: the reduced graph, the modulator
(renumbered into the reduced graph), ``origin`` mapping reduced vertices back
to input vertices, and a :class:`KernelReport`.

Vertex numbering in outputs: the modulator comes first in sorted input order,
followed by the added or retained outside vertices.
"""
from __future__ import annotations

import itertools
import json
import time
from dataclasses import dataclass, field
from math import comb

from .algebra import Field, MultilinearPoly, det_substituted_poly, poly_rank_basis
from .graph import Family, Graph, induced_subgraph, is_vertex_cover, recognize_family
from .solver import SearchBudgetExceeded, decide_od

DEFAULT_G_CAP = 3


@dataclass
class KernelReport:
    algorithm: str
    n_in: int
    m_in: int
    k: int
    d: int
    n_out: int
    m_out: int
    bound: int
    elapsed: float = field(default=0.0, compare=False)

    @property
    def within_bound(self) -> bool:
        return self.n_out <= self.bound

    def to_dict(self) -> dict:
        return {
            "algorithm": self.algorithm,
            "bound": self.bound,
            "d": self.d,
            "k": self.k,
            "m_in": self.m_in,
            "m_out": self.m_out,
            "n_in": self.n_in,
            "n_out": self.n_out,
            "within_bound": self.within_bound,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


@dataclass
class Kernel:
    graph: Graph
    modulator: list[int]
    origin: list[int]
    report: KernelReport


@dataclass
class KGraphResult:
    """``KG(G, X, m, d)``: ``G[X]`` plus one vertex ``v_S`` per realized neighborhood subset ``S``.

    ``subset_of[v]`` is ``S`` (input indices) for each added vertex and
    ``representative[v]`` the smallest outside vertex whose neighborhood
    contains ``S``. Vertices ``0..k-1`` are ``X`` in sorted order.
    """

    graph: Graph
    modulator: list[int]
    x_origin: list[int]
    subset_of: dict[int, tuple[int, ...]]
    representative: dict[int, int]
    m: int
    d: int

    def origin(self) -> list[int]:
        return self.x_origin + [self.representative[v] for v in range(len(self.x_origin), self.graph.n)]


def k_graph_bound(k: int, m: int, d: int) -> int:
    return k + sum(comb(k, i) for i in range(m, d + 1))


def k_graph_encoding_bits(k: int, m: int, d: int) -> int:
    """Bits for the ``X``-adjacency bitmap plus the subset-presence bitmap."""
    return comb(k, 2) + sum(comb(k, i) for i in range(m, d + 1))


def encode_k_graph(kg: KGraphResult) -> str:
    """Bit string: adjacency inside ``X`` then presence of ``v_S`` per subset ``S``."""
    k = len(kg.modulator)
    g = kg.graph
    bits = [int(g.has_edge(i, j)) for i, j in itertools.combinations(range(k), 2)]
    present = {tuple(sorted(kg.x_origin.index(u) for u in s)) for s in kg.subset_of.values()}
    for size in range(kg.m, kg.d + 1):
        bits.extend(int(s in present) for s in itertools.combinations(range(k), size))
    return "".join(map(str, bits))


def _check_cover(g: Graph, x) -> list[int]:
    x = sorted(set(x))
    if any(not 0 <= v < g.n for v in x):
        raise ValueError("modulator vertex out of range")
    if not is_vertex_cover(g, x):
        raise ValueError("x is not a vertex cover of g")
    return x


def build_k_graph(g: Graph, x, m: int, d: int) -> KGraphResult:
    """Add ``v_S`` adjacent to ``S`` for every ``S`` within ``X``, ``m <= |S| <= d``,
    that lies inside the neighborhood of some outside vertex.

    Subsets are added by increasing size, then lexicographically.
    """
    if not 1 <= m <= d:
        raise ValueError(f"need 1 <= m <= d, got m={m}, d={d}")
    x = _check_cover(g, x)
    xs = set(x)
    found: dict[tuple[int, ...], int] = {}
    for v in range(g.n):
        if v in xs:
            continue
        hood = sorted(g.adj[v])
        for size in range(m, min(d, len(hood)) + 1):
            for s in itertools.combinations(hood, size):
                if s not in found:
                    found[s] = v
    subsets = sorted(found, key=lambda s: (len(s), s))
    sub, _ = induced_subgraph(g, x)
    pos = {v: i for i, v in enumerate(x)}
    edges = list(sub.edges())
    subset_of, rep = {}, {}
    for j, s in enumerate(subsets):
        vid = len(x) + j
        edges.extend((pos[u], vid) for u in s)
        subset_of[vid] = s
        rep[vid] = found[s]
    kg = Graph.from_edges(len(x) + len(subsets), edges)
    return KGraphResult(kg, list(range(len(x))), list(x), subset_of, rep, m, d)


def _report(alg, g, x, d, out: Graph, bound, t0) -> KernelReport:
    return KernelReport(
        alg, g.n, g.num_edges, len(x), d, out.n, out.num_edges, bound, time.perf_counter() - t0
    )


def kernel_general(g: Graph, x, d: int) -> Kernel:
    """The ``O(k^d)``-vertex kernel ``KG(G, X, 1, d)``, valid over every field."""
    t0 = time.perf_counter()
    kg = build_k_graph(g, x, 1, d)
    k = len(kg.modulator)
    report = _report("general", g, kg.modulator, d, kg.graph, k_graph_bound(k, 1, d), t0)
    return Kernel(kg.graph, kg.modulator, kg.origin(), report)


def real_kernel_bound(k: int, d: int) -> int:
    return k + comb(k * d, d - 1)


def real_kernel_polynomials(kg: KGraphResult) -> dict[int, MultilinearPoly]:
    """The polynomial ``p_S`` of every added vertex of ``KG(G, X, d, d)``.

    Each ``X`` vertex at position ``pos`` (sorted order) owns variables
    ``pos*d .. pos*d + d - 1``, one per coordinate. ``p_S`` is the determinant
    of the ``d x d`` matrix whose columns are the vectors of ``S`` (sorted),
    with coordinate 0 fixed to 1.
    """
    d = kg.d
    k = len(kg.modulator)
    base = det_substituted_poly(d)
    pos = {v: i for i, v in enumerate(kg.x_origin)}
    polys = {}
    for vid, s in kg.subset_of.items():
        cols = [pos[u] for u in s]
        # matrix entry (i, j) is coordinate i of column vertex j
        mapping = [cols[j] * d + i for i in range(d) for j in range(d)]
        polys[vid] = base.relabel(mapping, k * d)
    return polys


def real_kernel_basis(kg: KGraphResult) -> list[int]:
    """Added vertices of ``kg`` whose polynomials form the greedy basis, in vertex order."""
    polys = real_kernel_polynomials(kg)
    added = sorted(polys)
    return [added[i] for i in poly_rank_basis([polys[v] for v in added])]


def kernel_real(g: Graph, x, d: int) -> Kernel:
    """The ``O(k^(d-1))``-vertex kernel over the reals.

    Phase 1 builds ``KG(G, X, d, d)``. Phase 2 keeps only the added vertices
    whose polynomials form a basis (first-occurrence greedy) of the span of all
    of them.
    """
    if d < 3:
        raise ValueError("the real kernel needs d >= 3")
    t0 = time.perf_counter()
    kg = build_k_graph(g, x, d, d)
    k = len(kg.modulator)
    keep = real_kernel_basis(kg)
    out, old = induced_subgraph(kg.graph, list(range(k)) + keep)
    origin = kg.origin()
    report = _report("real", g, kg.modulator, d, out, real_kernel_bound(k, d), t0)
    return Kernel(out, list(range(k)), [origin[v] for v in old], report)


def _labeled_graph_count(t: int) -> int:
    return 2 ** comb(t, 2)


def hereditary_kernel_bound(k: int, d: int, g_of_d: int) -> int:
    """``k`` plus ``t`` marked vertices per (graph on ``t`` labeled vertices, ``t``-tuple of subsets)."""
    subsets = sum(comb(k, i) for i in range(d + 1))
    return k + sum(_labeled_graph_count(t) * subsets**t * t for t in range(1, g_of_d + 1))


def kernel_hereditary(
    g: Graph, x, d: int, family: Family | str, g_of_d: int, cap: int = DEFAULT_G_CAP
) -> Kernel:
    """Marking kernel for modulators into a hereditary family with small NO-certificates.

    For every ordered tuple ``(v_1..v_t)`` of distinct outside vertices with
    ``t <= g_of_d`` (lexicographic order), its induced pattern ``F`` and every
    tuple ``(S_1..S_t)`` of subsets of size at most ``d`` with ``S_i`` inside
    ``N(v_i)``, the first tuple seen for the key ``(F, S_1..S_t)`` is marked.
    That is the lexicographically smallest matching tuple for each key.
    """
    if g_of_d > cap:
        raise ValueError(f"g_of_d={g_of_d} exceeds cap {cap}")
    t0 = time.perf_counter()
    xs = sorted(set(x))
    if any(not 0 <= v < g.n for v in xs):
        raise ValueError("modulator vertex out of range")
    outside = [v for v in range(g.n) if v not in set(xs)]
    rest, _ = induced_subgraph(g, outside)
    if not recognize_family(rest, family)[0]:
        raise ValueError(f"g minus x is not in family {Family(family).value}")
    xset = set(xs)
    small = {
        v: [s for size in range(d + 1) for s in itertools.combinations(sorted(g.adj[v] & xset), size)]
        for v in outside
    }
    seen = set()
    marked: set[int] = set()
    for t in range(1, g_of_d + 1):
        for tup in itertools.permutations(outside, t):
            pattern = tuple(g.has_edge(a, b) for a, b in itertools.combinations(tup, 2))
            for choice in itertools.product(*(small[v] for v in tup)):
                key = (t, pattern, choice)
                if key not in seen:
                    seen.add(key)
                    marked.update(tup)
    out, old = induced_subgraph(g, xs + sorted(marked), keep_order=True)
    report = _report("hereditary", g, xs, d, out, hereditary_kernel_bound(len(xs), d, g_of_d), t0)
    return Kernel(out, list(range(len(xs))), old, report)


def run_kernel(g: Graph, x, d: int, which: str, family: Family | str = Family.EMPTY, g_of_d: int = 1) -> Kernel:
    if which == "general":
        return kernel_general(g, x, d)
    if which == "real":
        return kernel_real(g, x, d)
    if which == "hereditary":
        return kernel_hereditary(g, x, d, family, g_of_d)
    raise ValueError(f"unknown kernel {which!r}")


def verify_kernel_equivalence(
    g: Graph,
    x,
    d: int,
    field: Field,
    which: str = "general",
    budget: int | None = None,
    **kwargs,
) -> bool | None:
    """Whether ``decide_od`` agrees on the input and on its kernel.

    Returns ``None`` (inconclusive) when either search runs out of budget.
    """
    kernel = run_kernel(g, x, d, which, **kwargs)
    try:
        before = decide_od(g, d, field, budget)[0]
        after = decide_od(kernel.graph, d, field, budget)[0]
    except SearchBudgetExceeded:
        return None
    return before == after
