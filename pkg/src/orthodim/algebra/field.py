"""Exact scalar arithmetic over prime fields GF(p) and the rationals."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

MAX_PRIME = 251

Vector = tuple  # tuple of field scalars


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % i for i in range(2, int(p**0.5) + 1))


class EnumerationCapExceeded(RuntimeError):
    """A brute-force enumeration would exceed its configured size cap."""


@dataclass(frozen=True)
class Field:
    """``Field(p)`` is GF(p) for a prime ``p``; ``Field(None)`` is the rationals.

    Prime field scalars are Python ints in ``range(p)``; rational scalars are
    :class:`fractions.Fraction`.
    """

    p: int | None = None

    def __post_init__(self):
        if self.p is not None and not (_is_prime(self.p) and self.p <= MAX_PRIME):
            raise ValueError(f"unsupported field order {self.p}: need a prime <= {MAX_PRIME}")

    @property
    def is_finite(self) -> bool:
        return self.p is not None

    @property
    def order(self) -> int | None:
        return self.p

    @property
    def characteristic(self) -> int:
        return 0 if self.p is None else self.p

    @property
    def name(self) -> str:
        return "rational" if self.p is None else f"gf{self.p}"

    def __str__(self):
        return self.name

    def __call__(self, x) -> int | Fraction:
        """Coerce ``x`` into the field."""
        if self.p is None:
            return Fraction(x)
        if isinstance(x, Fraction):
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        return int(x) % self.p

    def vector(self, xs: Sequence) -> Vector:
        return tuple(self(x) for x in xs)

    def add(self, a, b):
        return a + b if self.p is None else (a + b) % self.p

    def sub(self, a, b):
        return a - b if self.p is None else (a - b) % self.p

    def mul(self, a, b):
        return a * b if self.p is None else a * b % self.p

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(a) if self.p is None else pow(a, -1, self.p)

    def elements(self) -> range:
        if self.p is None:
            raise ValueError("the rationals cannot be enumerated")
        return range(self.p)

    def zero_vector(self, d: int) -> Vector:
        return tuple(self(0) for _ in range(d))

    def unit_vector(self, d: int, i: int) -> Vector:
        return tuple(self(int(j == i)) for j in range(d))

    def all_vectors(self, d: int, cap: int | None = None) -> Iterator[Vector]:
        check_space_cap(self, d, cap)
        return itertools.product(self.elements(), repeat=d)

    def parse_scalar(self, text: str):
        return self(Fraction(text))

    def format_scalar(self, x) -> str:
        return str(x)


GF2 = Field(2)
GF3 = Field(3)
GF5 = Field(5)
RATIONAL = Field(None)

DEFAULT_SPACE_CAP = 10**6


def check_space_cap(field: Field, d: int, cap: int | None = None) -> None:
    cap = DEFAULT_SPACE_CAP if cap is None else cap
    if not field.is_finite:
        raise ValueError("enumeration needs a finite field")
    if field.p**d > cap:
        raise EnumerationCapExceeded(f"{field.p}^{d} vectors exceed cap {cap}")


def field_from_name(name: str) -> Field:
    """Parse ``gf<p>`` or ``rational``."""
    name = name.strip().lower()
    if name in ("rational", "q", "rationals"):
        return RATIONAL
    if name.startswith("gf") and name[2:].isdigit():
        return Field(int(name[2:]))
    raise ValueError(f"unknown field {name!r}; expected gf<p> or rational")


def inner_product(field: Field, x: Vector, y: Vector):
    if len(x) != len(y):
        raise ValueError(f"dimension mismatch: {len(x)} vs {len(y)}")
    total = sum(a * b for a, b in zip(x, y))
    return field(total) if field.is_finite else total


def is_self_orthogonal(field: Field, x: Vector) -> bool:
    return inner_product(field, x, x) == 0


def normalize_projective(field: Field, x: Vector) -> Vector:
    """Scale ``x`` so its first nonzero entry is 1 (zero vector unchanged)."""
    for a in x:
        if a != 0:
            s = field.inv(a)
            return tuple(field.mul(s, b) for b in x)
    return tuple(x)


def enumerate_nonselforth_vectors(field: Field, d: int, cap: int | None = None) -> list[Vector]:
    """One representative per scaling class of non-self-orthogonal vectors of F^d.

    Representatives have first nonzero coordinate 1 and are listed in
    lexicographic order. Orthogonality and non-self-orthogonality are both
    invariant under nonzero scaling, so searches may restrict to these.
    """
    check_space_cap(field, d, cap)
    reps = []
    for lead in range(d):
        for tail in itertools.product(field.elements(), repeat=d - lead - 1):
            v = (0,) * lead + (1,) + tail
            if not is_self_orthogonal(field, v):
                reps.append(v)
    return sorted(reps)


def are_proportional(field: Field, x: Vector, y: Vector) -> bool:
    """True iff ``x`` and ``y`` are nonzero multiples of each other."""
    if not any(x) or not any(y):
        return False
    return normalize_projective(field, x) == normalize_projective(field, y)


def gaussian_binomial(d: int, k: int, q: int) -> int:
    """Number of ``k``-dimensional subspaces of ``GF(q)^d``."""
    if not 0 <= k <= d:
        raise ValueError(f"need 0 <= k <= d, got k={k}, d={d}")
    if q < 2:
        raise ValueError("q must be at least 2")
    num = den = 1
    for i in range(k):
        num *= q ** (d - i) - 1
        den *= q ** (k - i) - 1
    assert num % den == 0
    return num // den
