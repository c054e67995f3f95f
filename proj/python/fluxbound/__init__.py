"""Flux bounds from quantum relative entropy."""

import json as _json

from ._core import (
    B,
    DegenerateInputError,
    DomainError,
    Error,
    NumericError,
    ValidationError,
    eigh,
    evaluate_bounds,
    f,
    flux,
    g,
    h,
    montecarlo,
    onsager_like,
    optimal_shift,
    partial_trace,
    qtur,
    relative_entropy,
    saturating_family,
    schatten_norm,
    sign_decomposition,
    spin_pair,
    symmetric_relative_entropy,
    tensor_product,
    thermal_state,
    trace_distance_norm,
    validate_state,
)
from ._core import verify as _verify


def verify(seed=42, draws=1000, scenarios=100):
    """Run every property suite; returns the parsed report."""
    return _json.loads(_verify(seed, draws, scenarios))


__all__ = [name for name in dir() if not name.startswith("_")]
