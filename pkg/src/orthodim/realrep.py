"""Floating-point utilities for real orthogonal representations.

This is the only floating-point code in the package; nothing here is used by
the kernels or the exact deciders.
"""
from __future__ import annotations

import numpy as np

from .graph import Graph


def orthogonality_residual(g: Graph, vectors: np.ndarray) -> float:
    """Largest ``|<u_v, u_w>|`` over the edges of ``g`` (0 for edgeless graphs)."""
    vectors = np.asarray(vectors, dtype=float)
    return max((abs(float(vectors[u] @ vectors[v])) for u, v in g.edges()), default=0.0)


def random_orthogonal_representation(g: Graph, d: int, rng: np.random.Generator) -> np.ndarray | None:
    """Random real representation built greedily in vertex order.

    Vertex ``v`` gets a Gaussian combination of an orthonormal basis of the
    complement of its earlier neighbors' vectors. Returns ``None`` if some
    complement is zero.
    """
    vecs = np.zeros((g.n, d))
    for v in range(g.n):
        prev = np.array([vecs[w] for w in sorted(g.adj[v]) if w < v]).reshape(-1, d)
        if len(prev):
            _, sing, vt = np.linalg.svd(prev)
            rank = int(np.sum(sing > 1e-10))
            null = vt[rank:]
            if len(null) == 0:
                return None
            vecs[v] = rng.standard_normal(len(null)) @ null
        else:
            vecs[v] = rng.standard_normal(d)
    return vecs


def orthonormal_completion(a: np.ndarray) -> np.ndarray:
    """An orthonormal matrix whose first row is ``a / |a|``."""
    a = np.asarray(a, dtype=float)
    d = a.shape[0]
    q, _ = np.linalg.qr(np.column_stack([a, np.eye(d)]))
    q = q[:, :d]
    if q[:, 0] @ a < 0:
        q = -q
    return q.T


def normalize_first_entry(
    g: Graph, vectors: np.ndarray, seed: int = 0, tol: float = 1e-8, max_tries: int = 1000
) -> np.ndarray:
    """Rotate and rescale a real orthogonal representation so every first entry is 1.

    Draws ``a`` uniformly from ``{1..2n}^d`` until ``<a, u_v> != 0`` for every
    vertex (each draw succeeds with probability at least 1/2), rotates by an
    orthonormal matrix whose first row is parallel to ``a``, then divides each
    vector by its first entry. Inner products are only scaled, so orthogonality
    across edges survives.
    """
    vectors = np.asarray(vectors, dtype=float)
    n, d = vectors.shape
    if n != g.n:
        raise ValueError(f"{n} vectors for a graph on {g.n} vertices")
    norms = np.linalg.norm(vectors, axis=1)
    if np.any(norms == 0):
        raise ValueError("zero vector in representation")
    scaled = vectors / norms[:, None]
    if orthogonality_residual(g, scaled) > tol:
        raise ValueError("input is not orthogonal within tolerance")
    rng = np.random.default_rng(seed)
    for _ in range(max_tries):
        a = rng.integers(1, 2 * n + 1, size=d)
        dots = scaled @ a
        # a tiny first entry would blow up the final rescaling
        if np.all(np.abs(dots) > 1e-6 * np.linalg.norm(a)):
            break
    else:
        raise RuntimeError("no admissible direction found")
    rotated = scaled @ orthonormal_completion(a).T
    return rotated / rotated[:, :1]
