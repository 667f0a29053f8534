"""Sparse multilinear homogeneous polynomials with exact rational coefficients."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

Monomial = tuple[int, ...]


@dataclass(frozen=True)
class MultilinearPoly:
    """``sum coef * prod(x[i] for i in key)`` over strictly increasing index tuples.

    All monomials have length ``degree``; zero coefficients are never stored.
    """

    num_vars: int
    degree: int
    terms: Mapping[Monomial, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        for mono, c in self.terms.items():
            if len(mono) != self.degree:
                raise ValueError(f"monomial {mono} has degree != {self.degree}")
            if any(a >= b for a, b in zip(mono, mono[1:])):
                raise ValueError(f"monomial {mono} is not strictly increasing")
            if mono and (mono[0] < 0 or mono[-1] >= self.num_vars):
                raise ValueError(f"monomial {mono} out of range")
            if c == 0:
                raise ValueError("zero coefficients must not be stored")

    @classmethod
    def from_terms(cls, num_vars: int, degree: int, terms: Mapping[Monomial, object]) -> MultilinearPoly:
        acc: dict[Monomial, Fraction] = {}
        for mono, c in terms.items():
            key = tuple(sorted(mono))
            acc[key] = acc.get(key, Fraction(0)) + Fraction(c)
        return cls(num_vars, degree, {m: c for m, c in sorted(acc.items()) if c != 0})

    def __len__(self):
        return len(self.terms)

    def evaluate(self, values: Sequence) -> Fraction:
        total = Fraction(0)
        for mono, c in self.terms.items():
            prod = Fraction(c)
            for i in mono:
                prod *= values[i]
            total += prod
        return total

    def relabel(self, mapping: Sequence[int], num_vars: int) -> MultilinearPoly:
        """Rename variable ``i`` to ``mapping[i]`` (must be injective on used variables)."""
        return MultilinearPoly.from_terms(
            num_vars, self.degree, {tuple(mapping[i] for i in mono): c for mono, c in self.terms.items()}
        )

    def __add__(self, other: MultilinearPoly) -> MultilinearPoly:
        merged = dict(self.terms)
        for mono, c in other.terms.items():
            merged[mono] = merged.get(mono, Fraction(0)) + c
        return MultilinearPoly.from_terms(max(self.num_vars, other.num_vars), self.degree, merged)

    def scale(self, s) -> MultilinearPoly:
        return MultilinearPoly.from_terms(
            self.num_vars, self.degree, {m: c * Fraction(s) for m, c in self.terms.items()}
        )


def _perm_sign(perm: Sequence[int]) -> int:
    inversions = sum(1 for i, j in itertools.combinations(range(len(perm)), 2) if perm[i] > perm[j])
    return -1 if inversions % 2 else 1


def det_substituted_poly(d: int) -> MultilinearPoly:
    """The determinant of a ``d x d`` matrix with its first row replaced by ones.

    Variables are the matrix entries in row-major order (entry ``(i, j)`` is
    variable ``i*d + j``). Row-0 variables never occur, so the result is
    multilinear and homogeneous of degree ``d-1`` with ``d!`` terms.
    """
    if d < 2:
        raise ValueError("d must be at least 2")
    terms = {}
    for perm in itertools.permutations(range(d)):
        mono = tuple(sorted(i * d + perm[i] for i in range(1, d)))
        terms[mono] = _perm_sign(perm)
    return MultilinearPoly.from_terms(d * d, d - 1, terms)


def poly_rank_basis(polys: Sequence[MultilinearPoly]) -> list[int]:
    """Indices of a maximal linearly independent subset, greedy in input order.

    Exact Gaussian elimination over the rationals in the shared monomial basis;
    monomials are ordered graded-lexicographically (all share one degree, so
    plain lexicographic on the sorted index tuples).
    """
    if not polys:
        return []
    degree = polys[0].degree
    if any(p.degree != degree for p in polys):
        raise ValueError("all polynomials must share one degree")
    reduced: dict[Monomial, dict[Monomial, Fraction]] = {}
    chosen = []
    for idx, p in enumerate(polys):
        row = dict(p.terms)
        row = _reduce(row, reduced)
        if row:
            lead = min(row)
            inv = 1 / row[lead]
            row = {m: c * inv for m, c in row.items()}
            for piv, other in reduced.items():
                if lead in other:
                    f = other[lead]
                    for m, c in row.items():
                        v = other.get(m, Fraction(0)) - f * c
                        if v:
                            other[m] = v
                        else:
                            other.pop(m, None)
            reduced[lead] = row
            chosen.append(idx)
    return chosen


def _reduce(row: dict[Monomial, Fraction], reduced: dict[Monomial, dict[Monomial, Fraction]]):
    for piv, prow in reduced.items():
        f = row.get(piv)
        if f:
            for m, c in prow.items():
                v = row.get(m, Fraction(0)) - f * c
                if v:
                    row[m] = v
                else:
                    row.pop(m, None)
    return row


def in_span(p: MultilinearPoly, basis: Sequence[MultilinearPoly]) -> bool:
    """Whether ``p`` is a linear combination of ``basis``."""
    return len(poly_rank_basis(list(basis) + [p])) == len(poly_rank_basis(list(basis)))
