"""Bounded variation, graph box dimension and fractional integrals of bivariate sampled functions."""

from .gridfn import (
    CORPUS,
    GridFunction,
    Rect,
    corpus_eval,
    read_grid,
    sample,
    sample_corpus,
    weierstrass_1d,
    write_grid,
)
from .trend import BoundednessDiagnosis, Thresholds, diagnose
from .variation import (
    arzela_variation,
    bimonotone_decompose,
    frechet_variation,
    hahn_profile,
    hahn_sum,
    hardy_report,
    tonelli_variation,
    variation_profile,
    verify_bimonotone,
    vitali_variation,
)
from .boxdim import box_count, dimension_estimate, estimate_holder, holder_dim_bounds, max_range
from .fracint import FracParams, QuadratureScheme, frac_integral, gamma_fn

__version__ = "0.1.0"
