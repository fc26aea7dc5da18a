"""Exact curve counting and quantum cohomology rings for small homogeneous
spaces: recursion engines, a generic associativity-equation solver, potential
series with residual checks, structure-constant rings with presentations, and
the boundary-divisor combinatorics behind the plane recursion.
"""

from .boundary import BoundaryDatum, d_sum, enumerate_boundary, intersection_counts
from .engine import (
    GWTable,
    SolveError,
    TableDepthError,
    WdvvEquationId,
    fano3_numbers,
    fano3_solve,
    gw_invariant,
    nd_plane,
    nd_plane_numbers,
    standard_seeds,
    standard_table,
    wdvv_canonical_equations,
    wdvv_count,
    wdvv_solve,
)
from .model import (
    FanoModel,
    ModelError,
    builtin_model,
    expected_dimension,
    load_model,
    model_from_dict,
    save_model,
)
from .potential import PotentialBundle, build_potential, f_bracket, g_bracket, wdvv_residual
from .qring import (
    PresentationIdeal,
    QuantumRing,
    big_associator,
    big_product,
    big_ring,
    fixed_points_number,
    grassmannian_presentation,
    pr_presentation,
    presentation_from_big,
    s_r_determinant,
    small_ring,
)
from .series import GWSeries, GradedPoly, SeriesBounds, binomial_z, series_mul, series_partial

__all__ = [
    "BoundaryDatum",
    "FanoModel",
    "GWSeries",
    "GWTable",
    "GradedPoly",
    "ModelError",
    "PotentialBundle",
    "PresentationIdeal",
    "QuantumRing",
    "SeriesBounds",
    "SolveError",
    "TableDepthError",
    "WdvvEquationId",
    "big_associator",
    "big_product",
    "big_ring",
    "binomial_z",
    "build_potential",
    "builtin_model",
    "d_sum",
    "enumerate_boundary",
    "expected_dimension",
    "f_bracket",
    "fano3_numbers",
    "fano3_solve",
    "fixed_points_number",
    "g_bracket",
    "grassmannian_presentation",
    "gw_invariant",
    "intersection_counts",
    "load_model",
    "model_from_dict",
    "nd_plane",
    "nd_plane_numbers",
    "pr_presentation",
    "presentation_from_big",
    "s_r_determinant",
    "save_model",
    "series_mul",
    "series_partial",
    "small_ring",
    "standard_seeds",
    "standard_table",
    "wdvv_canonical_equations",
    "wdvv_count",
    "wdvv_residual",
    "wdvv_solve",
]

__version__ = "0.1.0"
