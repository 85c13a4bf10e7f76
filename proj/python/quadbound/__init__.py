"""Chebyshev coefficient and Gauss quadrature error bounds."""

import json as _json

from ._quadbound import (
    NonConvergence,
    actual_error,
    chebyshev_coefficients,
    eval_scaled_T,
    eval_T,
    gegenbauer_quadrature_bound,
    gegenbauer_weight_norm,
    golub_welsch,
    lemma_key2_check,
    lemma_key_expansion,
    new_coeff_bound,
    new_quadrature_bound,
    regularity_profile,
    run,
    table1_factors,
    trefethen_coeff_bound,
    xiang_quadrature_bound,
)


def report(command, **kwargs):
    """Run a report command and return the parsed json document."""
    kwargs["format"] = "json"
    return _json.loads(run(command, **kwargs))


__all__ = [
    "NonConvergence",
    "actual_error",
    "chebyshev_coefficients",
    "eval_T",
    "eval_scaled_T",
    "gegenbauer_quadrature_bound",
    "gegenbauer_weight_norm",
    "golub_welsch",
    "lemma_key2_check",
    "lemma_key_expansion",
    "new_coeff_bound",
    "new_quadrature_bound",
    "regularity_profile",
    "report",
    "run",
    "table1_factors",
    "trefethen_coeff_bound",
    "xiang_quadrature_bound",
]
