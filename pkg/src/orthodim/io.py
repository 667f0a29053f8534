"""Extended DIMACS instance files.

Line types (vertices are 1-based in files, 0-based in memory)::

    c <comment>
    p edge <n> <m>
    d <int>                       dimension
    f <field>                     gf<p> or rational
    e <u> <v>                     edge
    x <v>                         modulator vertex
    l <v> <dim> <entries...>      subspace basis, dim*d entries row by row

Canonical form orders lines as: comments, ``p``, ``d``, ``f``, sorted ``e``,
sorted ``x``, sorted ``l`` (with RREF bases). Serializing a parsed canonical
file reproduces it byte for byte.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field

import numpy as np

from .algebra import Field, Subspace, field_from_name
from .graph import Family, Graph, recognize_family, remove_vertices


class InstanceFormatError(ValueError):
    def __init__(self, lineno: int, msg: str):
        super().__init__(f"line {lineno}: {msg}")
        self.lineno = lineno


@dataclass
class Instance:
    graph: Graph
    modulator: list[int] | None = None
    subspaces: dict[int, Subspace] | None = None
    d: int | None = None
    field: Field | None = None
    comments: list[str] = dc_field(default_factory=list)


def parse_instance(text: str) -> Instance:
    n = None
    edges: list[tuple[int, int]] = []
    seen_edges = set()
    mod: list[int] = []
    l_lines: list[tuple[int, int, list[str], int]] = []
    comments: list[str] = []
    d = fld = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        tag, *rest = line.split()
        try:
            if tag == "c":
                comments.append(line[1:].strip())
            elif tag == "p":
                if len(rest) != 3 or rest[0] != "edge":
                    raise InstanceFormatError(lineno, "expected 'p edge <n> <m>'")
                n = int(rest[1])
            elif tag == "d":
                d = int(rest[0])
            elif tag == "f":
                fld = field_from_name(rest[0])
            elif tag in ("e", "x", "l") and n is None:
                raise InstanceFormatError(lineno, f"'{tag}' line before 'p' line")
            elif tag == "e":
                if len(rest) != 2:
                    raise InstanceFormatError(lineno, "expected 'e <u> <v>'")
                u, v = int(rest[0]) - 1, int(rest[1]) - 1
                if u == v:
                    raise InstanceFormatError(lineno, f"loop at vertex {u + 1}")
                if not (0 <= u < n and 0 <= v < n):
                    raise InstanceFormatError(lineno, "vertex out of range")
                key = (min(u, v), max(u, v))
                if key in seen_edges:
                    raise InstanceFormatError(lineno, f"duplicate edge {u + 1} {v + 1}")
                seen_edges.add(key)
                edges.append(key)
            elif tag == "x":
                v = int(rest[0]) - 1
                if not 0 <= v < n:
                    raise InstanceFormatError(lineno, "vertex out of range")
                mod.append(v)
            elif tag == "l":
                v, dim = int(rest[0]) - 1, int(rest[1])
                if not 0 <= v < n:
                    raise InstanceFormatError(lineno, "vertex out of range")
                l_lines.append((v, dim, rest[2:], lineno))
            else:
                raise InstanceFormatError(lineno, f"unknown line type {tag!r}")
        except (ValueError, IndexError) as exc:
            if isinstance(exc, InstanceFormatError):
                raise
            raise InstanceFormatError(lineno, str(exc)) from exc
    if n is None:
        raise InstanceFormatError(0, "missing 'p edge' line")
    subspaces = None
    if l_lines:
        if d is None or fld is None:
            raise InstanceFormatError(l_lines[0][3], "'l' lines need 'd' and 'f' lines")
        subspaces = {}
        for v, dim, entries, lineno in l_lines:
            if len(entries) != dim * d:
                raise InstanceFormatError(lineno, f"expected {dim * d} entries, got {len(entries)}")
            if v in subspaces:
                raise InstanceFormatError(lineno, f"duplicate subspace for vertex {v + 1}")
            vals = [fld.parse_scalar(t) for t in entries]
            rows = [vals[i * d:(i + 1) * d] for i in range(dim)]
            subspaces[v] = Subspace.span(fld, rows, d)
    return Instance(
        Graph.from_edges(n, edges),
        sorted(set(mod)) if mod else None,
        subspaces,
        d,
        fld,
        comments,
    )


def serialize_instance(inst: Instance) -> str:
    g = inst.graph
    lines = [f"c {c}" if c else "c" for c in inst.comments]
    lines.append(f"p edge {g.n} {g.num_edges}")
    if inst.d is not None:
        lines.append(f"d {inst.d}")
    if inst.field is not None:
        lines.append(f"f {inst.field.name}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    lines.extend(f"x {v + 1}" for v in sorted(inst.modulator or ()))
    for v, s in sorted((inst.subspaces or {}).items()):
        entries = " ".join(str(a) for row in s.basis for a in row)
        lines.append(f"l {v + 1} {s.dim} {entries}".rstrip())
    return "\n".join(lines) + "\n"


def read_instance(path) -> Instance:
    with open(path, encoding="utf-8") as fh:
        return parse_instance(fh.read())


def write_instance(path, inst: Instance) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize_instance(inst))


# --------------------------------------------------------------------------
# random instances with a planted modulator


def seed_streams(seed: int, count: int) -> list[np.random.Generator]:
    """Independent generators derived from one seed (``SeedSequence.spawn``)."""
    return [np.random.default_rng(s) for s in np.random.SeedSequence(seed).spawn(count)]


def _random_split(rng: np.random.Generator, verts: list[int], density: float) -> list[tuple[int, int]]:
    if not verts:
        return []
    size = int(rng.integers(0, len(verts) + 1))
    clique, indep = verts[:size], verts[size:]
    edges = list(itertools.combinations(clique, 2))
    edges.extend((c, i) for c in clique for i in indep if rng.random() < density)
    return edges


def _random_chordal(rng: np.random.Generator, count: int, density: float) -> list[tuple[int, int]]:
    """Chordal graph grown by attaching each new vertex to a clique of earlier ones."""
    edges: set[tuple[int, int]] = set()
    adj: list[set[int]] = [set() for _ in range(count)]
    for v in range(1, count):
        anchor = int(rng.integers(0, v))
        cands = sorted(adj[anchor] & set(range(v)))
        clique = [anchor] + [w for w in cands if rng.random() < density]
        clique = [w for w in clique if all(w == c or c in adj[w] for c in clique)]
        for w in clique:
            adj[v].add(w)
            adj[w].add(v)
            edges.add((w, v))
    return sorted(edges)


def random_outside_edges(
    rng: np.random.Generator, outside: list[int], family: Family | str, density: float
) -> list[tuple[int, int]]:
    """Edges among ``outside`` so that they induce a member of ``family``."""
    family = Family(family)
    if family is Family.EMPTY:
        return []
    order = list(rng.permutation(outside)) if outside else []
    order = [int(v) for v in order]
    if family is Family.PATH:
        return list(zip(order, order[1:]))
    if family in (Family.SPLIT, Family.UNION_SPLIT):
        return _random_split(rng, order, density)
    chordal = _random_chordal(rng, len(order), density)
    present = {(min(a, b), max(a, b)) for a, b in chordal}
    return [
        (order[a], order[b])
        for a, b in itertools.combinations(range(len(order)), 2)
        if (a, b) not in present
    ]


def gen_random(
    n: int, k: int, family: Family | str, density: float, seed: int, d: int | None = None, field: Field | None = None
) -> Instance:
    """Random graph on ``n`` vertices with a planted modulator of size ``k``.

    Edges inside the modulator and between the modulator and the rest appear
    independently with probability ``density``; the rest induces a random
    member of ``family``. Deterministic in ``seed``.
    """
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    if not 0.0 <= density <= 1.0:
        raise ValueError("density must lie in [0, 1]")
    rng_mod, rng_x, rng_out = seed_streams(seed, 3)
    x = sorted(int(v) for v in rng_mod.choice(n, size=k, replace=False)) if k else []
    xs = set(x)
    outside = [v for v in range(n) if v not in xs]
    edges = [
        (u, v)
        for u, v in itertools.combinations(range(n), 2)
        if (u in xs or v in xs) and rng_x.random() < density
    ]
    edges.extend(random_outside_edges(rng_out, outside, family, density))
    g = Graph.from_edges(n, edges)
    assert recognize_family(remove_vertices(g, x)[0], family)[0]
    return Instance(g, x, None, d, field, [f"random {Family(family).value} n={n} k={k} p={density} seed={seed}"])
