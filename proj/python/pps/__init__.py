"""Predator, prey and scavenger population model."""

import json as _json

from ._core import (
    Dataset,
    ModelParams,
    PpsError,
    adam,
    analysis_table,
    bfgs,
    format_params,
    init_params,
    interior_equilibrium,
    interior_poly_coeffs,
    interior_poly_roots,
    jacobian,
    load_params,
    parse_params,
    rhs,
    routh_hurwitz,
    simulate,
    synthesize,
    total_loss,
)
from . import _core


def analyze(params):
    """Steady states with existence checks and stability verdicts, as a dict."""
    return _json.loads(_core._analyze_json(params))


def estimate(dataset, seed=1, epochs=100, bfgs_iterations=200):
    """Network-then-BFGS parameter fit; returns the estimation report as a dict."""
    return _json.loads(_core._estimate_json(dataset, seed, epochs, bfgs_iterations))


__all__ = [
    "Dataset",
    "ModelParams",
    "PpsError",
    "adam",
    "analysis_table",
    "analyze",
    "bfgs",
    "estimate",
    "format_params",
    "init_params",
    "interior_equilibrium",
    "interior_poly_coeffs",
    "interior_poly_roots",
    "jacobian",
    "load_params",
    "parse_params",
    "rhs",
    "routh_hurwitz",
    "simulate",
    "synthesize",
    "total_loss",
]
