"""Entanglement sudden death in DFS and NS quantum memories."""

from ._core import (
    ArgumentError,
    NoThresholdError,
    NumericalError,
    closed_form_fidelity,
    concurrence,
    contour,
    density_matrix,
    evaluate_metric,
    fidelity,
    negativity,
    run_cli,
    sweep,
    threshold,
    tripartite_negativity,
    validate,
)

__all__ = [
    "ArgumentError",
    "NoThresholdError",
    "NumericalError",
    "closed_form_fidelity",
    "concurrence",
    "contour",
    "density_matrix",
    "evaluate_metric",
    "fidelity",
    "negativity",
    "run_cli",
    "sweep",
    "threshold",
    "tripartite_negativity",
    "validate",
]
