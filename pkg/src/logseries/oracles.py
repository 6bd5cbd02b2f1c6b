"""Independent cross-checks for the series evaluator.

The residual x - 1 - log(x) equals the double integral of 1/u**2 over
the triangle-like region t in [1, x], s in [1, t] (with the usual signed
convention when x < 1: both orientations flip, so the value stays
nonnegative).  Evaluating that integral by composite Simpson quadrature
shares no code and no algebraic identity with the square-root recurrence,
which makes it a genuine oracle: agreement is evidence, not tautology.

The inner integral is itself done by quadrature rather than by its
closed form, since the closed form would smuggle the answer in.  Both
axes use the same panel count.  reference_log exposes the platform
libm logarithm as a second, cheaper oracle.
"""

import math
from dataclasses import dataclass

import numpy as np

from .series import PositiveInput, _positive_value

__all__ = ["QuadratureConfig", "double_integral_residual", "reference_log"]


@dataclass(frozen=True)
class QuadratureConfig:
    """Panel count per axis for composite Simpson; must be even, >= 2."""

    panels: int = 1024

    def __post_init__(self) -> None:
        if isinstance(self.panels, bool) or not isinstance(self.panels, int):
            raise ValueError(f"panels must be an integer, got {self.panels!r}")
        if self.panels < 2 or self.panels % 2 != 0:
            raise ValueError(f"panels must be an even integer >= 2, got {self.panels}")


def _simpson_weights(panels: int) -> np.ndarray:
    w = np.ones(panels + 1)
    w[1:-1:2] = 4.0
    w[2:-1:2] = 2.0
    return w


def double_integral_residual(x: "float | PositiveInput", config: "QuadratureConfig | None" = None) -> float:
    """Approximate x - 1 - log(x) by nested composite Simpson quadrature.

    Outer nodes t_i span [1, x]; for each, the inner integral of 1/s**2
    over [1, t_i] is done with the same rule.  The integrand is a square
    in disguise, so the result is nonnegative up to quadrature and
    rounding error, and the error falls off as panels**-4 for x in a
    moderate range around 1.
    """
    xv = _positive_value(x)
    cfg = config if config is not None else QuadratureConfig()
    n = cfg.panels

    # Outer nodes t_i = 1 + (x - 1) * i/n; inner nodes s_ij = 1 + (t_i - 1) * j/n.
    # Writing s as an outer product keeps both signed orientations consistent.
    frac = np.arange(n + 1) / n
    t_offsets = (xv - 1.0) * frac
    s = 1.0 + np.outer(t_offsets, frac)
    g = 1.0 / (s * s)
    w = _simpson_weights(n)
    inner = (g @ w) * (t_offsets / (3.0 * n))
    return float((w @ inner) * ((xv - 1.0) / (3.0 * n)))


def reference_log(x: "float | PositiveInput") -> float:
    """The platform libm natural logarithm, as an accuracy yardstick."""
    return math.log(_positive_value(x))
