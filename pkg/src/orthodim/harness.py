"""Seeded oracle-equivalence suites shared by the CLI, tests and demos.

Every suite derives trial ``i`` from ``SeedSequence(seed).spawn(trials)[i]``,
so a single 64-bit seed replays the whole run and any single trial can be
rerun in isolation. A suite passes only if every trial passes.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .algebra import GF2, GF3, Field, Subspace, in_span
from .certificates import cochordal_no_certificate, split_no_certificate, verify_certificate
from .graph import Family, Graph, chromatic_number, min_vertex_cover, recognize_family, remove_vertices
from .io import gen_random
from .kernels import (
    build_k_graph,
    k_graph_bound,
    kernel_general,
    kernel_real,
    real_kernel_basis,
    real_kernel_bound,
    real_kernel_polynomials,
)
from .reductions import col_to_od_path, col_to_od_vc, modulator_size
from .solver import SubChooseInstance, decide_od, decide_subchoose, fpt_decide_vc

FIELDS = (GF2, GF3)


@dataclass
class SuiteResult:
    suite: str
    total: int = 0
    failures: list[int] = field(default_factory=list)
    notes: dict = field(default_factory=dict)

    @property
    def passed(self) -> int:
        return self.total - len(self.failures)

    @property
    def ok(self) -> bool:
        return not self.failures and self.total > 0

    def summary(self) -> str:
        return f"{self.passed}/{self.total} equivalent"


def trial_rngs(seed: int, trials: int) -> list[np.random.Generator]:
    return [np.random.default_rng(s) for s in np.random.SeedSequence(seed).spawn(trials)]


def _sub_seed(rng: np.random.Generator) -> int:
    return int(rng.integers(0, 2**63))


def random_empty_kv(rng: np.random.Generator, max_n: int = 10, max_k: int = 5, density: float = 0.5):
    """Graph whose planted modulator is a vertex cover."""
    n = int(rng.integers(2, max_n + 1))
    k = int(rng.integers(1, min(max_k, n) + 1))
    inst = gen_random(n, k, Family.EMPTY, density, _sub_seed(rng))
    return inst.graph, inst.modulator


def run_suite(name: str, trials: int, seed: int, fn: Callable[[int, np.random.Generator], bool]) -> SuiteResult:
    res = SuiteResult(name)
    for i, rng in enumerate(trial_rngs(seed, trials)):
        res.total += 1
        if not fn(i, rng):
            res.failures.append(i)
    return res


# --------------------------------------------------------------------------
# individual trials


def trial_kernel_general(i: int, rng, d: int = 3) -> bool:
    g, x = random_empty_kv(rng)
    f = FIELDS[i % 2]
    ker = kernel_general(g, x, d)
    if ker.graph.n > k_graph_bound(len(x), 1, d):
        return False
    return decide_od(g, d, f)[0] == decide_od(ker.graph, d, f)[0]


def real_kernel_checks(g: Graph, x, d: int = 3) -> tuple[bool, bool]:
    """``(size within k + C(dk, d-1), every removed p_S in the span of the kept ones)``."""
    ker = kernel_real(g, x, d)
    size_ok = ker.graph.n <= real_kernel_bound(len(x), d)
    kg = build_k_graph(g, x, d, d)
    polys = real_kernel_polynomials(kg)
    kept = [polys[v] for v in real_kernel_basis(kg)]
    span_ok = len(kept) == ker.graph.n - len(x) and all(in_span(p, kept) for p in polys.values())
    return size_ok, span_ok


def trial_kernel_real(i: int, rng) -> bool:
    g, x = random_empty_kv(rng)
    return all(real_kernel_checks(g, x, 3))


def trial_fpt(i: int, rng) -> bool:
    g, x = random_empty_kv(rng, max_n=9, max_k=4)
    f = FIELDS[i % 2]
    d = 2 + (i // 2) % 2
    return fpt_decide_vc(g, x, d, f) == decide_od(g, d, f)[0]


def random_graph(rng, max_n: int = 6, density: float | None = None) -> Graph:
    n = int(rng.integers(1, max_n + 1))
    if density is None:
        density = float(rng.uniform(0.3, 0.95))
    edges = [(u, v) for u, v in itertools.combinations(range(n), 2) if rng.random() < density]
    return Graph.from_edges(n, edges)


def reduction_agrees(g: Graph, fields=FIELDS, d: int = 3) -> bool:
    x = sorted(min_vertex_cover(g, g.n))
    out = col_to_od_vc(g, x, d)
    if len(out.modulator) != modulator_size(len(x), d):
        return False
    colorable = chromatic_number(g) <= d
    return all(decide_od(out.graph, d, f)[0] == colorable for f in fields)


def trial_reduction(i: int, rng) -> bool:
    return reduction_agrees(random_graph(rng))


def trial_reduction_path(i: int, rng) -> bool:
    n = int(rng.integers(2, 8))
    k = int(rng.integers(1, min(3, n) + 1))
    inst = gen_random(n, k, Family.PATH, 0.5, _sub_seed(rng))
    out = col_to_od_path(inst.graph, inst.modulator)
    rest, _ = remove_vertices(out.graph, out.modulator)
    if rest.n != n - k or not recognize_family(rest, Family.PATH)[0]:
        return False
    colorable = chromatic_number(inst.graph) <= 3
    return all(decide_od(out.graph, 3, f)[0] == colorable for f in FIELDS)


def random_subspace(rng, f: Field, d: int, max_dim: int | None = None) -> Subspace:
    """Random nonzero subspace containing at least one non-self-orthogonal vector."""
    while True:
        dim = int(rng.integers(1, (max_dim or d) + 1))
        rows = [[int(a) for a in rng.integers(0, f.p, size=d)] for _ in range(dim)]
        s = Subspace.span(f, rows, d)
        if s.dim > 0 and s.has_nonselforth_vector():
            return s


def random_no_instance(rng, family: Family, f: Field, d: int, max_n: int = 8, tries: int = 200) -> SubChooseInstance:
    """Rejection-sample a NO instance of subspace choosability on a split or cochordal graph."""
    for _ in range(tries):
        n = int(rng.integers(2, max_n + 1))
        g = gen_random(n, 0, family, float(rng.uniform(0.3, 0.9)), _sub_seed(rng)).graph
        inst = SubChooseInstance(g, d, f, tuple(random_subspace(rng, f, d, max_dim=max(1, d - 1)) for _ in range(n)))
        if not decide_subchoose(inst)[0]:
            return inst
    raise RuntimeError("no NO instance found")


def trial_certificate(i: int, rng) -> bool:
    family = (Family.SPLIT, Family.COCHORDAL)[i % 2]
    f = FIELDS[(i // 2) % 2]
    d = 2 + (i // 4) % 2
    inst = random_no_instance(rng, family, f, d)
    wit = split_no_certificate(inst) if family is Family.SPLIT else cochordal_no_certificate(inst)
    return verify_certificate(inst, wit) is True


SUITES: dict[str, Callable] = {
    "kernel-general": trial_kernel_general,
    "kernel-real": trial_kernel_real,
    "fpt": trial_fpt,
    "reduction": trial_reduction,
    "reduction-path": trial_reduction_path,
    "certificate": trial_certificate,
}


def run_named_suite(name: str, trials: int, seed: int) -> SuiteResult:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    return run_suite(name, trials, seed, SUITES[name])
