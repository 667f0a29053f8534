"""Subspaces of F^d in reduced row-echelon form, and the complement tests built on them."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .field import (
    Field,
    EnumerationCapExceeded,
    Vector,
    check_space_cap,
    gaussian_binomial,
    inner_product,
    is_self_orthogonal,
)

DEFAULT_SUBSPACE_CAP = 10**5


def rref(field: Field, rows: Iterable[Sequence], d: int) -> tuple[list[list], list[int]]:
    """Reduced row-echelon form of ``rows``; returns (nonzero rows, pivot columns)."""
    mat = [[field(a) for a in row] for row in rows]
    for row in mat:
        if len(row) != d:
            raise ValueError(f"row of length {len(row)} in ambient dimension {d}")
    pivots: list[int] = []
    r = 0
    for c in range(d):
        pr = next((i for i in range(r, len(mat)) if mat[i][c] != 0), None)
        if pr is None:
            continue
        mat[r], mat[pr] = mat[pr], mat[r]
        s = field.inv(mat[r][c])
        mat[r] = [field.mul(s, a) for a in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [field.sub(a, field.mul(f, b)) for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


@dataclass(frozen=True)
class Subspace:
    """A subspace of ``field^d`` held as its canonical RREF basis.

    Because the basis is canonical, ``==`` is subspace equality.
    """

    field: Field
    d: int
    basis: tuple[Vector, ...]

    @classmethod
    def span(cls, field: Field, vectors: Iterable[Sequence], d: int) -> Subspace:
        rows, _ = rref(field, vectors, d)
        return cls(field, d, tuple(tuple(r) for r in rows))

    @classmethod
    def zero(cls, field: Field, d: int) -> Subspace:
        return cls(field, d, ())

    @classmethod
    def full(cls, field: Field, d: int) -> Subspace:
        return cls(field, d, tuple(field.unit_vector(d, i) for i in range(d)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def pivots(self) -> list[int]:
        return [next(i for i, a in enumerate(row) if a != 0) for row in self.basis]

    def contains(self, v: Sequence) -> bool:
        v = [self.field(a) for a in v]
        for row, c in zip(self.basis, self.pivots()):
            if v[c] != 0:
                f = v[c]
                v = [self.field.sub(a, self.field.mul(f, b)) for a, b in zip(v, row)]
        return not any(v)

    def __contains__(self, v) -> bool:
        return self.contains(v)

    def is_subspace_of(self, other: Subspace) -> bool:
        return all(other.contains(b) for b in self.basis)

    def complement(self) -> Subspace:
        """The orthogonal complement under the standard bilinear form."""
        f, d = self.field, self.d
        piv = self.pivots()
        free = [c for c in range(d) if c not in piv]
        kernel = []
        for fc in free:
            x = [f(0)] * d
            x[fc] = f(1)
            for row, pc in zip(self.basis, piv):
                x[pc] = f.sub(f(0), row[fc])
            kernel.append(x)
        return Subspace.span(f, kernel, d)

    def __add__(self, other: Subspace) -> Subspace:
        return Subspace.span(self.field, self.basis + other.basis, self.d)

    def intersect(self, other: Subspace) -> Subspace:
        # the standard form is nondegenerate, so (A^perp + B^perp)^perp = A cap B
        return (self.complement() + other.complement()).complement()

    def meets_nontrivially(self, other: Subspace) -> bool:
        return self.dim + other.dim > (self + other).dim

    def vectors(self, cap: int | None = None) -> Iterator[Vector]:
        """Every vector of the subspace (finite fields only)."""
        f = self.field
        check_space_cap(f, self.dim, cap)
        for coeffs in itertools.product(f.elements(), repeat=self.dim):
            v = [0] * self.d
            for c, row in zip(coeffs, self.basis):
                if c:
                    v = [(a + c * b) % f.p for a, b in zip(v, row)]
            yield tuple(v)

    def has_nonselforth_vector(self) -> bool:
        """Whether the subspace contains a non-self-orthogonal vector."""
        return exists_nonselforth_in_complement(self.field, self.complement().basis, self.d)[0]

    def to_lists(self) -> list[list]:
        return [list(r) for r in self.basis]


def span(field: Field, vectors: Iterable[Sequence], d: int) -> Subspace:
    return Subspace.span(field, vectors, d)


def orthogonal_complement(w: Subspace) -> Subspace:
    return w.complement()


def exists_nonselforth_in_complement(
    field: Field, vectors: Iterable[Sequence], d: int
) -> tuple[bool, Vector | None]:
    """Is there a non-self-orthogonal vector orthogonal to every input vector?

    Returns ``(answer, witness)``. In characteristic 2 the answer is yes iff the
    all-one vector is outside the span ``W``; otherwise iff ``W^perp`` is not
    contained in ``W``. The witness is a basis vector of ``W^perp``, or in odd
    or zero characteristic possibly the sum of two of them.
    """
    w = Subspace.span(field, vectors, d)
    perp = w.complement().basis
    if field.characteristic == 2:
        if w.contains((1,) * d):
            return False, None
        ones = (1,) * d
        x = next(b for b in perp if inner_product(field, b, ones) != 0)
        return True, x
    for x in perp:
        if not is_self_orthogonal(field, x):
            return True, x
    outside = [x for x in perp if not w.contains(x)]
    if not outside:
        return False, None
    x = outside[0]
    y = next(b for b in perp if inner_product(field, x, b) != 0)
    witness = tuple(field.add(a, b) for a, b in zip(x, y))
    assert not is_self_orthogonal(field, witness)
    return True, witness


def enumerate_subspaces(field: Field, d: int, k: int, cap: int | None = None) -> Iterator[Subspace]:
    """Every ``k``-dimensional subspace of ``field^d``, each exactly once.

    Walks RREF matrices: a choice of pivot columns plus free entries to the
    right of each pivot that are not themselves pivot columns.
    """
    cap = DEFAULT_SUBSPACE_CAP if cap is None else cap
    if not field.is_finite:
        raise ValueError("subspace enumeration needs a finite field")
    if gaussian_binomial(d, k, field.p) > cap:
        raise EnumerationCapExceeded(f"{k}-subspaces of GF({field.p})^{d} exceed cap {cap}")
    for piv in itertools.combinations(range(d), k):
        slots = [(r, c) for r, pc in enumerate(piv) for c in range(pc + 1, d) if c not in piv]
        for vals in itertools.product(field.elements(), repeat=len(slots)):
            rows = [[0] * d for _ in range(k)]
            for r, pc in enumerate(piv):
                rows[r][pc] = 1
            for (r, c), a in zip(slots, vals):
                rows[r][c] = a
            yield Subspace(field, d, tuple(tuple(r) for r in rows))


def all_subspaces(field: Field, d: int, cap: int | None = None) -> Iterator[Subspace]:
    for k in range(d + 1):
        yield from enumerate_subspaces(field, d, k, cap)


def compute_m(field: Field, d: int, cap: int | None = None) -> int:
    """Largest ``m`` such that every subspace of dimension below ``m`` has a
    non-self-orthogonal vector in its orthogonal complement.

    Finite fields are answered by enumerating subspaces of increasing
    dimension; over the rationals there are no nonzero self-orthogonal
    vectors, so the value is ``d``.
    """
    if d < 1:
        raise ValueError("d must be at least 1")
    if not field.is_finite:
        return d
    for k in range(d + 1):
        for w in enumerate_subspaces(field, d, k, cap):
            if not exists_nonselforth_in_complement(field, w.basis, d)[0]:
                return k
    raise AssertionError("the full space always fails")


def is_anisotropic(field: Field, d: int, cap: int | None = None) -> bool:
    """True iff ``field^d`` has no nonzero self-orthogonal vector (exhaustive scan)."""
    if not field.is_finite:
        return True
    return not any(any(v) and is_self_orthogonal(field, v) for v in field.all_vectors(d, cap))
