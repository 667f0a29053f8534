"""Orthogonality dimension of graphs: exact deciders, kernels, reductions and certificates."""
from .algebra import GF2, GF3, GF5, RATIONAL, Field, Subspace, compute_m, field_from_name
from .certificates import (
    build_irreducible_split_instance,
    cochordal_no_certificate,
    split_no_certificate,
    split_no_certificate_anisotropic,
    verify_certificate,
)
from .etr import emit_etr_system
from .graph import Family, Graph, recognize_family
from .io import gen_random, parse_instance, serialize_instance
from .kernels import build_k_graph, kernel_general, kernel_hereditary, kernel_real
from .realrep import normalize_first_entry
from .reductions import col_to_od_path, col_to_od_vc, extract_coloring_from_orthrep, gadget_graph
from .solver import (
    OrthRep,
    SearchBudgetExceeded,
    SubChooseInstance,
    decide_od,
    decide_subchoose,
    fpt_decide_vc,
    verify_orthrep,
)

__version__ = "0.1.0"
