import itertools

import hypothesis.strategies as st
import pytest
from hypothesis import settings

from orthodim.algebra import enumerate_nonselforth_vectors, inner_product
from orthodim.graph import Graph

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def brute_force_od(g: Graph, d: int, field) -> bool:
    """Plain product enumeration over projective non-self-orthogonal vectors."""
    if g.n == 0:
        return True
    vecs = enumerate_nonselforth_vectors(field, d)
    edges = g.edges()
    for assignment in itertools.product(vecs, repeat=g.n):
        if all(inner_product(field, assignment[u], assignment[v]) == 0 for u, v in edges):
            return True
    return False


def brute_force_chi(g: Graph) -> int:
    for q in range(g.n + 1):
        for col in itertools.product(range(q), repeat=g.n):
            if all(col[u] != col[v] for u, v in g.edges()):
                return q
    return g.n


@st.composite
def graphs(draw, min_n=0, max_n=6):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, keep in zip(pairs, mask) if keep])


@pytest.fixture
def oracle():
    return brute_force_od


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def record():
    """Print and remember one pass/fail line for an acceptance criterion."""

    def _record(number: int, title: str, ok: bool, detail: str) -> None:
        line = f"criterion {number:>2} {'PASS' if ok else 'FAIL'}  {title}: {detail}"
        print(line)
        ACCEPTANCE_LINES.append(line)

    return _record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
