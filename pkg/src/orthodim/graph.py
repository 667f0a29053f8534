"""Simple undirected graphs on dense 0-based vertex indices.

Everything downstream (solvers, kernels, reductions) works on :class:`Graph`.
Graphs are immutable; operations return new graphs.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence


@dataclass(frozen=True)
class Graph:
    """Simple graph with vertices ``0..n-1``.

    ``adj[v]`` is the neighbor set of ``v``. Use :meth:`from_edges` rather than
    building ``adj`` by hand; it validates simplicity and symmetry.
    """

    n: int
    adj: tuple[frozenset[int], ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise ValueError(f"adjacency has {len(self.adj)} rows for n={self.n}")
        for v, nbrs in enumerate(self.adj):
            for w in nbrs:
                if not 0 <= w < self.n:
                    raise ValueError(f"neighbor {w} of {v} out of range")
                if w == v:
                    raise ValueError(f"loop at vertex {v}")
                if v not in self.adj[w]:
                    raise ValueError(f"asymmetric edge {v}-{w}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], labels=None) -> Graph:
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u}-{v} out of range for n={n}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(frozenset(s) for s in nbrs), labels)

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, tuple(frozenset() for _ in range(n)))

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edges(self) -> list[tuple[int, int]]:
        """Edges as sorted ``(u, v)`` pairs with ``u < v``, in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    @property
    def num_edges(self) -> int:
        return sum(len(s) for s in self.adj) // 2

    def vertices(self) -> range:
        return range(self.n)


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(m: int) -> Graph:
    """The cycle on vertices ``0..m-1`` with edges ``{i, i+1 mod m}``."""
    if m < 3:
        raise ValueError(f"a cycle needs at least 3 vertices, got {m}")
    return Graph.from_edges(m, ((i, (i + 1) % m) for i in range(m)))


def star_graph(leaves: int) -> Graph:
    """``K_{1,leaves}`` with center 0."""
    return Graph.from_edges(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def complement(g: Graph) -> Graph:
    everyone = frozenset(range(g.n))
    return Graph(g.n, tuple(everyone - g.adj[v] - {v} for v in range(g.n)), g.labels)


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for h in graphs:
        edges.extend((u + offset, v + offset) for u, v in h.edges())
        offset += h.n
    return Graph.from_edges(offset, edges)


def induced_subgraph(g: Graph, s: Iterable[int], keep_order: bool = False) -> tuple[Graph, list[int]]:
    """Subgraph induced by ``s``.

    Returns the new graph and ``old``, where ``old[i]`` is the original index of
    new vertex ``i``. New vertices follow the sorted order of ``s``, or the
    given order (duplicates dropped) when ``keep_order`` is set.
    """
    old = list(dict.fromkeys(s)) if keep_order else sorted(set(s))
    for v in old:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for n={g.n}")
    new = {v: i for i, v in enumerate(old)}
    adj = tuple(frozenset(new[w] for w in g.adj[v] if w in new) for v in old)
    labels = tuple(g.labels[v] for v in old) if g.labels else None
    return Graph(len(old), adj, labels), old


def remove_vertices(g: Graph, s: Iterable[int]) -> tuple[Graph, list[int]]:
    drop = set(s)
    return induced_subgraph(g, (v for v in range(g.n) if v not in drop))


def connected_components(g: Graph) -> list[list[int]]:
    """Components as sorted vertex lists, ordered by smallest vertex."""
    seen = [False] * g.n
    comps = []
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        stack, comp = [start], []
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in g.adj[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def is_clique(g: Graph, s: Iterable[int]) -> bool:
    s = list(s)
    return all(g.has_edge(u, v) for u, v in itertools.combinations(s, 2))


def is_independent(g: Graph, s: Iterable[int]) -> bool:
    s = list(s)
    return not any(g.has_edge(u, v) for u, v in itertools.combinations(s, 2))


def is_vertex_cover(g: Graph, x: Iterable[int]) -> bool:
    x = set(x)
    return all(u in x or v in x for u, v in g.edges())


def min_vertex_cover(g: Graph, budget: int) -> frozenset[int] | None:
    """A minimum vertex cover if one of size at most ``budget`` exists, else ``None``.

    Bounded search tree: vertices of degree one are resolved by taking their
    neighbor, otherwise branch on a maximum-degree vertex ``v``: either ``v``
    is in the cover or all of ``N(v)`` is. Budgets are tried in increasing
    order so the first cover found is minimum.
    """
    if budget < 0:
        raise ValueError("budget must be non-negative")
    adj = {v: set(g.adj[v]) for v in range(g.n) if g.adj[v]}
    for k in range(budget + 1):
        cover = _vc_branch(adj, k)
        if cover is not None:
            return frozenset(cover)
    return None


def _vc_branch(adj: dict[int, set[int]], k: int) -> set[int] | None:
    adj = {v: set(ns) for v, ns in adj.items() if ns}
    taken: set[int] = set()

    def take(v):
        taken.add(v)
        for w in adj.pop(v, ()):
            adj[w].discard(v)
            if not adj[w]:
                del adj[w]

    changed = True
    while changed:
        changed = False
        for v in sorted(adj):
            if v in adj and len(adj[v]) == 1:
                take(next(iter(adj[v])))
                changed = True
    k -= len(taken)
    if k < 0:
        return None
    if not adj:
        return taken
    num_edges = sum(len(ns) for ns in adj.values()) // 2
    max_deg = max(len(ns) for ns in adj.values())
    if num_edges > k * max_deg:
        return None
    v = min(adj, key=lambda u: (-len(adj[u]), u))
    rest = {u: ns - {v} for u, ns in adj.items() if u != v}
    sub = _vc_branch(rest, k - 1)
    if sub is not None:
        return taken | sub | {v}
    nbrs = adj[v]
    if len(nbrs) <= k:
        rest = {u: ns - nbrs for u, ns in adj.items() if u not in nbrs}
        sub = _vc_branch(rest, k - len(nbrs))
        if sub is not None:
            return taken | sub | nbrs
    return None


# --------------------------------------------------------------------------
# chordality and graph families


def max_cardinality_search(g: Graph) -> list[int]:
    """Visit order of maximum cardinality search (ties to smallest index)."""
    weight = [0] * g.n
    done = [False] * g.n
    order = []
    for _ in range(g.n):
        v = max((u for u in range(g.n) if not done[u]), key=lambda u: (weight[u], -u))
        done[v] = True
        order.append(v)
        for w in g.adj[v]:
            if not done[w]:
                weight[w] += 1
    return order


def perfect_elimination_order(g: Graph) -> list[int] | None:
    """A perfect elimination order of ``g`` or ``None`` if ``g`` is not chordal.

    The reverse of a maximum cardinality search order is a perfect elimination
    order exactly when the graph is chordal; we verify it directly.
    """
    peo = max_cardinality_search(g)[::-1]
    pos = {v: i for i, v in enumerate(peo)}
    for v in peo:
        later = [w for w in g.adj[v] if pos[w] > pos[v]]
        if not later:
            continue
        parent = min(later, key=pos.__getitem__)
        if any(w != parent and not g.has_edge(parent, w) for w in later):
            return None
    return peo


def is_chordal(g: Graph) -> bool:
    return perfect_elimination_order(g) is not None


def split_partition(g: Graph) -> tuple[list[int], list[int]] | None:
    """A (clique, independent set) partition, or ``None`` if ``g`` is not split.

    Uses the Hammer-Simeone degree sequence characterization.
    """
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    deg = [g.degree(v) for v in order]
    m = 0
    for i, di in enumerate(deg, start=1):
        if di >= i - 1:
            m = i
    if sum(deg[:m]) != m * (m - 1) + sum(deg[m:]):
        return None
    clique, indep = sorted(order[:m]), sorted(order[m:])
    assert is_clique(g, clique) and is_independent(g, indep)
    return clique, indep


def path_order(g: Graph) -> list[int] | None:
    """Vertices in path order if ``g`` is a path (possibly empty), else ``None``."""
    if g.n == 0:
        return []
    if g.num_edges != g.n - 1 or any(g.degree(v) > 2 for v in range(g.n)):
        return None
    ends = [v for v in range(g.n) if g.degree(v) <= 1]
    if not ends:
        return None
    order, prev = [ends[0]], None
    while len(order) < g.n:
        cur = order[-1]
        nxt = [w for w in g.adj[cur] if w != prev]
        if not nxt:
            return None
        prev = cur
        order.append(nxt[0])
    return order


class Family(str, enum.Enum):
    EMPTY = "empty"
    PATH = "path"
    SPLIT = "split"
    COCHORDAL = "cochordal"
    UNION_SPLIT = "union-split"
    UNION_COCHORDAL = "union-cochordal"


def recognize_family(g: Graph, family: Family | str):
    """Decide membership of ``g`` in ``family``.

    Returns ``(member, witness)``. Witnesses: ``(C, I)`` for split, the vertex
    order for path, a perfect elimination order of the complement for
    cochordal, and a per-component list of those for the union families.
    ``witness`` is ``None`` whenever ``member`` is false.
    """
    family = Family(family)
    if family is Family.EMPTY:
        return g.num_edges == 0, None
    if family is Family.PATH:
        order = path_order(g)
        return order is not None, order
    if family is Family.SPLIT:
        part = split_partition(g)
        return part is not None, part
    if family is Family.COCHORDAL:
        peo = perfect_elimination_order(complement(g))
        return peo is not None, peo
    base = Family.SPLIT if family is Family.UNION_SPLIT else Family.COCHORDAL
    witnesses = []
    for comp in connected_components(g):
        sub, old = induced_subgraph(g, comp)
        ok, wit = recognize_family(sub, base)
        if not ok:
            return False, None
        witnesses.append(_relabel_witness(wit, old))
    return True, witnesses


def _relabel_witness(wit, old: Sequence[int]):
    if isinstance(wit, tuple):
        return tuple([old[v] for v in part] for part in wit)
    return [old[v] for v in wit]


def find_cosimplicial_vertex(g: Graph) -> int | None:
    """Smallest vertex whose non-neighbors form an independent set, if any.

    Such a vertex is simplicial in the complement, so one always exists when
    ``g`` is cochordal and nonempty.
    """
    for v in range(g.n):
        non_nbrs = [w for w in range(g.n) if w != v and w not in g.adj[v]]
        if is_independent(g, non_nbrs):
            return v
    return None


def chromatic_number(g: Graph) -> int:
    """Exact chromatic number by backtracking (desk-scale only)."""
    from .solver import decide_coloring

    if g.n == 0:
        return 0
    q = 1
    while not decide_coloring(g, q)[0]:
        q += 1
    return q


def clique_number(g: Graph) -> int:
    best = 0

    def grow(clique: list[int], cands: list[int]):
        nonlocal best
        best = max(best, len(clique))
        for i, v in enumerate(cands):
            if len(clique) + len(cands) - i <= best:
                return
            grow(clique + [v], [w for w in cands[i + 1:] if w in g.adj[v]])

    grow([], list(range(g.n)))
    return best
