"""Exact bounded and negative moments of (Laurent bi)orthogonal polynomials,
verified against brute-force lattice-path and sequence oracles."""

from .matrix import Matrix, SingularMatrixError, determinant, matrix_inverse, minor
from .moments import (
    IllDefinedError,
    bounded_moment,
    extended_moment,
    moment_gf,
    negative_cf,
    negative_moment,
    negative_moment_gf,
    orth_poly,
    pv_closed_forms,
    transfer_matrix,
    usmani_inverse,
    v_inverse_closed_form,
    viennot_cf,
    well_defined,
)
from .poly import MultiPoly, poly_div_exact, poly_gcd
from .ratfunc import RatFunc, cf_eval, reverse_gf, series_expand
from .weights import WeightSpec, spec

__all__ = [
    "IllDefinedError",
    "Matrix",
    "MultiPoly",
    "RatFunc",
    "SingularMatrixError",
    "WeightSpec",
    "bounded_moment",
    "cf_eval",
    "determinant",
    "extended_moment",
    "matrix_inverse",
    "minor",
    "moment_gf",
    "negative_cf",
    "negative_moment",
    "negative_moment_gf",
    "orth_poly",
    "poly_div_exact",
    "poly_gcd",
    "pv_closed_forms",
    "reverse_gf",
    "series_expand",
    "spec",
    "transfer_matrix",
    "usmani_inverse",
    "v_inverse_closed_form",
    "viennot_cf",
    "well_defined",
]
