"""Polynomial constraint systems over the reals whose solutions are orthogonal representations.

Output format, one constraint per line after a header::

    ETR vars=<n*d> d=<d>
    NEQ0 1*x_0_0*x_0_0 1*x_0_1*x_0_1      # sum of squares of vertex 0 is nonzero
    EQ0 1*x_0_0*x_1_0 1*x_0_1*x_1_1       # vertices 0 and 1 are orthogonal

Variable ``x_v_i`` is coordinate ``i`` of vertex ``v`` (both 0-based).
Inequalities come in vertex order, then equalities in sorted edge order.
"""
from __future__ import annotations

from .graph import Graph


def _var(v: int, i: int) -> str:
    return f"x_{v}_{i}"


def emit_etr_system(g: Graph, d: int) -> str:
    if d < 1:
        raise ValueError("d must be at least 1")
    lines = [f"ETR vars={g.n * d} d={d}"]
    for v in range(g.n):
        lines.append("NEQ0 " + " ".join(f"1*{_var(v, i)}*{_var(v, i)}" for i in range(d)))
    for u, v in g.edges():
        lines.append("EQ0 " + " ".join(f"1*{_var(u, i)}*{_var(v, i)}" for i in range(d)))
    return "\n".join(lines) + "\n"


def parse_etr_counts(text: str) -> dict[str, int]:
    """Header and constraint counts of an emitted system."""
    lines = text.splitlines()
    head = dict(tok.split("=") for tok in lines[0].split()[1:])
    return {
        "vars": int(head["vars"]),
        "d": int(head["d"]),
        "neq": sum(1 for ln in lines[1:] if ln.startswith("NEQ0 ")),
        "eq": sum(1 for ln in lines[1:] if ln.startswith("EQ0 ")),
    }
