"""Near-maturity American puts under exponential Levy models."""

from ._levylab import (
    Atom,
    BoundaryLimit,
    Error,
    FiniteActivity,
    InvalidInput,
    InvalidModel,
    Kou,
    LevyModel,
    Merton,
    NumericalFailure,
    PriceSurface,
    RegimeMismatch,
    RegimeReport,
    TemperedStable,
    VarianceGamma,
    __version__,
    classify_regime,
    critical_price_european,
    european_put,
    lattice_local_time_mean,
    load_model,
    rate_experiment,
    simulate_increments,
    solve_american,
    theta_ladder,
    xi_limit,
    y_star_lattice,
    y_star_pde,
)

__all__ = [name for name in dir() if not name.startswith("_")]
