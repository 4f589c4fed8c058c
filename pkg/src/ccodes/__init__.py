"""Affine Cartesian evaluation codes and their combinatorial machinery.

Construct codes from evaluation sets over small finite fields, compute
their generalized Hamming weight hierarchies and duals in closed form,
and cross-check every closed form against exhaustive oracles.
"""

from .codes import (
    CartesianCodeSpec,
    LinearCode,
    WeiDualityReport,
    brute_ghw,
    brute_min_weight,
    code_summary,
    dual_code,
    dual_hierarchy,
    extremal_polynomial,
    extremal_polynomials,
    gaussian_binomial,
    generator_matrix,
    ghw_closed_form,
    hierarchy,
    matmul,
    max_common_zeros,
    min_distance_closed_form,
    points,
    rank,
    rref,
    spec_from_parts,
    wei_duality_check,
)
from .gf import Field, FieldElement, field_create, parse_field
from .grid import (
    GridShape,
    brute_min_shadow,
    check_clements_lindstrom,
    lex_segment,
    lex_segment_shadow_size,
    min_shadow_size,
    rth_of_deg_ge,
    rth_of_deg_le,
    shadow,
    shadow_level,
    tuple_at_rank_desc,
)
from .hilbert import (
    MonomialIdeal,
    Polynomial,
    footprint_upper_bound,
    hilbert_fn,
    leading_term,
)

__version__ = "0.1.0"
