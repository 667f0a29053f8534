"""Exact linear algebra over prime fields and the rationals."""
from .field import (
    GF2,
    GF3,
    GF5,
    RATIONAL,
    EnumerationCapExceeded,
    Field,
    are_proportional,
    enumerate_nonselforth_vectors,
    field_from_name,
    gaussian_binomial,
    inner_product,
    is_self_orthogonal,
    normalize_projective,
)
from .poly import MultilinearPoly, det_substituted_poly, in_span, poly_rank_basis
from .subspace import (
    Subspace,
    all_subspaces,
    compute_m,
    enumerate_subspaces,
    exists_nonselforth_in_complement,
    is_anisotropic,
    orthogonal_complement,
    rref,
    span,
)
