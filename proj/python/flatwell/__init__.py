"""Ground-state energy estimates for power-law potential wells V(x) = mu |x/a|^N."""

from ._core import (
    ConvergenceError,
    DomainError,
    EnergyEstimate,
    QuadratureResult,
    ReferenceSolution,
    beta_for,
    coefficient,
    estimate,
    integrate_decaying_moment,
    ln_gamma,
    lookup,
    moment,
    optimize_alpha,
    rayleigh_quotient,
    relative_error,
    run_cli,
    solve_ground_state,
    sweep_beta,
    table,
    wavefunction,
)

__all__ = [
    "ConvergenceError",
    "DomainError",
    "EnergyEstimate",
    "QuadratureResult",
    "ReferenceSolution",
    "beta_for",
    "coefficient",
    "estimate",
    "integrate_decaying_moment",
    "ln_gamma",
    "lookup",
    "moment",
    "optimize_alpha",
    "rayleigh_quotient",
    "relative_error",
    "run_cli",
    "solve_ground_state",
    "sweep_beta",
    "table",
    "wavefunction",
]
