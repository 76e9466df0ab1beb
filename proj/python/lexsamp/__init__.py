"""Exactly uniform random linear extensions of partial orders."""

from ._core import (  # noqa: F401
    STAR,
    BoundingState,
    CapExceeded,
    CycleError,
    ItemIndexError,
    ParseError,
    Poset,
    Relation,
    adj_step,
    bc_step,
    bounds,
    cftp_doubling,
    cftp_fixed,
    chi_square_sf,
    close_and_validate,
    cost_report,
    count_extensions,
    enumerate_extensions,
    extended_precedes,
    initial_bounding_state,
    is_linear_extension,
    measure_tau,
    normalize,
    recommended_t,
    sample,
    sim_step,
    success_curve,
    tau_mean_bound,
    tau_tail_threshold,
    uniformity_test,
)

__version__ = "0.1.0"
