"""Natural logarithm from repeated square roots, without cancellation.

For x > 0 write u_k = x**(2**-k) - 1, the k-th square-root decrement of x.
Two classical sequences meet in that quantity:

* the difference quotient D_n = 2**n * u_n, which converges to log(x), and
* the nonnegative series S_n = sum(2**(k-1) * u_k**2 for k = 1..n), which
  converges to x - 1 - log(x).

S_n + D_n = x - 1 holds exactly for every n, so the series and the
quotient are two views of one iteration, and the identity doubles as a
per-row self check.  Every term is a square, which makes S_n nondecreasing
and gives log(x) <= x - 1 for free; the terms decay with ratio tending to
1/2, which drives the stopping rule in :func:`eval_log`.

Numerically the decrement is never formed as sqrt - 1.  That subtraction
loses roughly k bits near 1; instead the chain is carried through

    u_{k+1} = u_k / (sqrt(1 + u_k) + 1)

which is the same map algebraically and keeps the relative error of u_k
at O(k * eps).  For x < 1/2 the chain is seeded from square roots of x
itself: fl(x - 1) would discard the low bits of x, an absolute error of
order eps that no later step can recover and that inflates to eps/x in
the computed logarithm.  Once the repeated root reaches [1/2, 1) the
subtraction r - 1 is exact and the recurrence takes over.
"""

import math
from dataclasses import dataclass
from itertools import islice
from typing import Iterator, NamedTuple

__all__ = [
    "PositiveInput",
    "EvalConfig",
    "DecrementState",
    "LogApproxResult",
    "TraceRow",
    "decrement_step",
    "iterate_decrements",
    "term",
    "partial_sum",
    "difference_quotient",
    "eval_log",
    "tail_ratio",
    "trace",
]


@dataclass(frozen=True)
class PositiveInput:
    """A validated argument for the logarithm: finite, strictly positive."""

    x: float

    def __post_init__(self) -> None:
        if isinstance(self.x, bool) or not isinstance(self.x, (int, float)):
            raise TypeError(f"x must be a real number, got {type(self.x).__name__}")
        object.__setattr__(self, "x", float(self.x))
        if not math.isfinite(self.x) or self.x <= 0.0:
            raise ValueError(f"x must be a finite positive real, got {self.x!r}")

    def __float__(self) -> float:
        return self.x


@dataclass(frozen=True)
class EvalConfig:
    """Stopping parameters for :func:`eval_log`.

    The estimated tail of the series is ``safety_factor * term_n``; the
    factor covers the worst case sum(r**j) = term_n * r / (1 - r) of a
    geometric tail with ratio r <= 1/2, with slack because the actual
    ratio sits slightly below 1/2 for x > 1 and approaches it from below.
    """

    tol: float = 1e-14
    max_terms: int = 96
    safety_factor: float = 2.0

    def __post_init__(self) -> None:
        if not (isinstance(self.tol, float) and math.isfinite(self.tol)) or self.tol <= 0.0:
            raise ValueError(f"tol must be a finite positive float, got {self.tol!r}")
        if isinstance(self.max_terms, bool) or not isinstance(self.max_terms, int) or self.max_terms < 1:
            raise ValueError(f"max_terms must be a positive integer, got {self.max_terms!r}")
        if not math.isfinite(self.safety_factor) or self.safety_factor < 1.0:
            raise ValueError(f"safety_factor must be >= 1, got {self.safety_factor!r}")


class DecrementState(NamedTuple):
    """One link of the decrement chain: u = x**(2**-k) - 1."""

    k: int
    u: float


class TraceRow(NamedTuple):
    """Row k of the evaluation table.

    ``partial_sum + diff_quotient`` should reproduce x - 1 up to rounding;
    the trace renderer reports that defect per row.
    """

    k: int
    u: float
    term: float
    partial_sum: float
    diff_quotient: float


@dataclass(frozen=True)
class LogApproxResult:
    """Outcome of :func:`eval_log`.

    ``log_value`` approximates log(x), ``residual`` approximates
    x - 1 - log(x); the two are tied by log_value + residual ~= x - 1.
    ``tail_estimate`` is the stopping bound compared against tol, and
    ``converged`` records whether it was met within max_terms.
    """

    log_value: float
    residual: float
    terms_used: int
    tail_estimate: float
    converged: bool


def _positive_value(x: "float | PositiveInput") -> float:
    if isinstance(x, PositiveInput):
        return x.x
    return PositiveInput(x).x


def _nonneg_int(value: int, name: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeError(f"{name} must be an integer, got {type(value).__name__}")
    if value < 0:
        raise ValueError(f"{name} must be >= 0, got {value}")
    return value


def _positive_int(value: int, name: str) -> int:
    _nonneg_int(value, name)
    if value < 1:
        raise ValueError(f"{name} must be >= 1, got {value}")
    return value


def decrement_step(u: float) -> float:
    """Advance one square root: send x**w - 1 to x**(w/2) - 1.

    Uses u / (sqrt(1 + u) + 1), the rationalized form of sqrt(1 + u) - 1,
    so no digits cancel.  Preserves sign, and |result| <= |u| / 2 for
    u >= 0 (for -1 < u < 0 the magnitude still shrinks, the factor
    tending to 1/2 as u -> 0).
    """
    if isinstance(u, bool) or not isinstance(u, (int, float)):
        raise TypeError(f"u must be a real number, got {type(u).__name__}")
    u = float(u)
    if not math.isfinite(u) or u <= -1.0:
        raise ValueError(f"u must be a finite real > -1, got {u!r}")
    return u / (math.sqrt(1.0 + u) + 1.0)


def _decrements(x: float) -> Iterator[float]:
    """Yield u_0, u_1, u_2, ... for u_k = x**(2**-k) - 1, indefinitely.

    For x >= 1/2 the start is exact (Sterbenz: x - 1 rounds to itself on
    [1/2, 2], and for larger x the leading digits survive).  For x < 1/2
    the leading entries are taken as fl(r - 1) of the repeated square
    root r of x, and the recurrence only starts once r >= 1/2, where the
    subtraction is again exact.
    """
    if x >= 0.5:
        u = x - 1.0
    else:
        r = x
        while r < 0.5:
            yield r - 1.0
            r = math.sqrt(r)
        u = r - 1.0
    yield u
    while True:
        u = decrement_step(u)
        yield u


def iterate_decrements(x: "float | PositiveInput", n: int) -> list[DecrementState]:
    """Return [(0, u_0), (1, u_1), ..., (n, u_n)] for u_k = x**(2**-k) - 1."""
    xv = _positive_value(x)
    _nonneg_int(n, "n")
    chain = islice(_decrements(xv), n + 1)
    return [DecrementState(k, u) for k, u in enumerate(chain)]


def term(k: int, u_k: float) -> float:
    """Series term 2**(k-1) * u_k**2, scaled exactly via ldexp."""
    _positive_int(k, "k")
    if isinstance(u_k, bool) or not isinstance(u_k, (int, float)):
        raise TypeError(f"u_k must be a real number, got {type(u_k).__name__}")
    u_k = float(u_k)
    if not math.isfinite(u_k) or u_k <= -1.0:
        raise ValueError(f"u_k must be a finite real > -1, got {u_k!r}")
    return math.ldexp(u_k * u_k, k - 1)


def partial_sum(x: "float | PositiveInput", n: int) -> float:
    """S_n = sum of the first n terms; approximates x - 1 - log(x).

    Nonnegative and nondecreasing in n.  S_0 = 0 by the empty-sum
    convention.
    """
    xv = _positive_value(x)
    _nonneg_int(n, "n")
    s = 0.0
    for k, u in enumerate(islice(_decrements(xv), n + 1)):
        if k >= 1:
            s += math.ldexp(u * u, k - 1)
    return s


def difference_quotient(x: "float | PositiveInput", n: int) -> float:
    """D_n = 2**n * u_n, the difference-quotient approximation to log(x)."""
    xv = _positive_value(x)
    _nonneg_int(n, "n")
    u = next(islice(_decrements(xv), n, None))
    return math.ldexp(u, n)


def eval_log(x: "float | PositiveInput", config: "EvalConfig | None" = None) -> LogApproxResult:
    """Approximate log(x) adaptively.

    Accumulates terms until safety_factor * term_n <= tol or max_terms is
    reached; the returned log_value is the difference quotient D_n at the
    stopping index, not x - 1 - S_n, so it never subtracts two close
    numbers.  A result with ``converged`` false (tolerance not reached
    within max_terms) is still the best available approximation; no
    exception is raised for that case.
    """
    xv = _positive_value(x)
    cfg = config if config is not None else EvalConfig()
    chain = _decrements(xv)
    next(chain)  # u_0 contributes no term
    s = 0.0
    u = 0.0
    tail = math.inf
    n = 0
    for n in range(1, cfg.max_terms + 1):
        u = next(chain)
        t = math.ldexp(u * u, n - 1)
        s += t
        tail = cfg.safety_factor * t
        if tail <= cfg.tol:
            break
    return LogApproxResult(
        log_value=math.ldexp(u, n),
        residual=s,
        terms_used=n,
        tail_estimate=tail,
        converged=tail <= cfg.tol,
    )


def tail_ratio(x: "float | PositiveInput", k: int) -> float:
    """term_k * 2**k, which converges to log(x)**2 / 2 as k grows.

    Undefined at x = 1, where every term vanishes.
    """
    xv = _positive_value(x)
    _positive_int(k, "k")
    if xv == 1.0:
        raise ValueError("tail_ratio is undefined at x = 1 (all terms are zero)")
    u = next(islice(_decrements(xv), k, None))
    return math.ldexp(u * u, 2 * k - 1)


def trace(x: "float | PositiveInput", n: int) -> list[TraceRow]:
    """Rows (k, u_k, term_k, S_k, D_k) for k = 0..n.

    Row 0 carries term 0 and S_0 = 0; D_0 = u_0.  Within each row
    S_k + D_k reproduces x - 1 up to accumulated rounding.
    """
    xv = _positive_value(x)
    _nonneg_int(n, "n")
    chain = _decrements(xv)
    u0 = next(chain)
    rows = [TraceRow(0, u0, 0.0, 0.0, u0)]
    s = 0.0
    for k in range(1, n + 1):
        u = next(chain)
        t = math.ldexp(u * u, k - 1)
        s += t
        rows.append(TraceRow(k, u, t, s, math.ldexp(u, k)))
    return rows
