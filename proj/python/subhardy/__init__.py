"""Kernel positivity, operator compressions and sub-Hardy space checks on the unit disk."""

from ._core import (
    PointSet,
    Symbol,
    Verdict,
    __version__,
    boundary_witness,
    classify,
    defect_compression,
    gram,
    gram_psd_verdict,
    hardy_decomposition_check,
    kernel_sum_residual,
    kernel_value,
    min_eig,
    multiplier_matrix,
    numerical_rank,
    parse_symbol,
    point_set,
    polar_grid,
    print_symbol,
    product_compression,
    psd_verdict,
    random_points,
    rank_one_perturbation_check,
    threshold_scan,
    v_isometry_residual,
)

__all__ = [
    "PointSet",
    "Symbol",
    "Verdict",
    "__version__",
    "boundary_witness",
    "classify",
    "defect_compression",
    "gram",
    "gram_psd_verdict",
    "hardy_decomposition_check",
    "kernel_sum_residual",
    "kernel_value",
    "min_eig",
    "multiplier_matrix",
    "numerical_rank",
    "parse_symbol",
    "point_set",
    "polar_grid",
    "print_symbol",
    "product_compression",
    "psd_verdict",
    "random_points",
    "rank_one_perturbation_check",
    "threshold_scan",
    "v_isometry_residual",
]
