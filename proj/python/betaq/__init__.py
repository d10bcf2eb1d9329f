"""Exact q-series, eta quotients and CM evaluations for odd Dirichlet beta values."""

from ._betaq import (
    QSeries,
    classical_identity,
    cm_report,
    decompose,
    eta_expand,
    euler_number,
    h_k_series,
    lambert_expand,
    limit_check,
    run_suite,
    t_count,
    verify_theorem2,
)

__all__ = [
    "QSeries",
    "classical_identity",
    "cm_report",
    "decompose",
    "eta_expand",
    "euler_number",
    "h_k_series",
    "lambert_expand",
    "limit_check",
    "run_suite",
    "t_count",
    "verify_theorem2",
]
