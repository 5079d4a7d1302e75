"""Negativities and pi-tangle of a tripartite fermionic GHZ state with two
uniformly accelerated observers: corrected and legacy closed-form one-tangles
plus an independent dense-matrix pipeline (partial transpose, Hermitian
eigenvalues, trace norm) they are cross-checked against."""

from ._core import (
    ACCEL_MAX,
    DeltaSurfaces,
    Family,
    Mode,
    TangleReport,
    __version__,
    build_phi,
    delta_pi_series,
    delta_surfaces,
    evaluate,
    hermitian_eigenvalues,
    negativity,
    one_tangle_corrected,
    one_tangle_legacy,
    one_tangle_single_acceleration,
    partial_transpose,
    pi_tangle,
    rho_abici,
    trace_norm,
    two_tangle,
)

__all__ = [
    "ACCEL_MAX",
    "DeltaSurfaces",
    "Family",
    "Mode",
    "TangleReport",
    "__version__",
    "build_phi",
    "delta_pi_series",
    "delta_surfaces",
    "evaluate",
    "hermitian_eigenvalues",
    "negativity",
    "one_tangle_corrected",
    "one_tangle_legacy",
    "one_tangle_single_acceleration",
    "partial_transpose",
    "pi_tangle",
    "rho_abici",
    "trace_norm",
    "two_tangle",
]
