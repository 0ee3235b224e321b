"""Two-qubit concurrence and measurement-induced nonlocality under thermal dissipation."""

from ._core import (
    DensityMatrix,
    ModelParams,
    QcorrError,
    WeakStrength,
    analytic_state_at,
    brute_force_hs_min,
    brute_force_trace_min,
    concurrence,
    concurrence_xstate,
    hs_min,
    initial_state,
    integrate,
    run_validation,
    strength_sweep_csv,
    sudden_death_time,
    time_sweep_csv,
    trace_min,
    weak_factor,
    weak_hs_min,
    weak_trace_min,
)

__all__ = [name for name in dir() if not name.startswith("_")]
