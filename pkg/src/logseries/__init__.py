"""Cancellation-safe natural logarithm from repeated square roots.

The identity x - 1 - log(x) = sum(2**(k-1) * (x**(2**-k) - 1)**2, k >= 1)
turns the logarithm into a sum of squares.  :mod:`logseries.series`
evaluates it stably, :mod:`logseries.oracles` cross-checks it against
independent quadrature and libm, and :mod:`logseries.inequalities` uses
it to verify the classical tangent, concavity, and AM-GM inequalities.
The ``logseries`` command line fronts all of it.
"""

from .inequalities import (
    AmgmReport,
    SweepReport,
    amgm_check,
    concavity_check,
    log_uniform,
    sweep_amgm,
    sweep_concavity,
    sweep_tangent_at,
    sweep_tangent_line,
    tangent_at,
    tangent_line_gap,
)
from .oracles import QuadratureConfig, double_integral_residual, reference_log
from .series import (
    DecrementState,
    EvalConfig,
    LogApproxResult,
    PositiveInput,
    TraceRow,
    decrement_step,
    difference_quotient,
    eval_log,
    iterate_decrements,
    partial_sum,
    tail_ratio,
    term,
    trace,
)

__version__ = "0.1.0"

__all__ = [
    "AmgmReport",
    "DecrementState",
    "EvalConfig",
    "LogApproxResult",
    "PositiveInput",
    "QuadratureConfig",
    "SweepReport",
    "TraceRow",
    "amgm_check",
    "concavity_check",
    "decrement_step",
    "difference_quotient",
    "double_integral_residual",
    "eval_log",
    "iterate_decrements",
    "log_uniform",
    "partial_sum",
    "reference_log",
    "sweep_amgm",
    "sweep_concavity",
    "sweep_tangent_at",
    "sweep_tangent_line",
    "tail_ratio",
    "tangent_at",
    "tangent_line_gap",
    "term",
    "trace",
]
