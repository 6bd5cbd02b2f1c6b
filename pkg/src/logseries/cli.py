"""Command-line front end: eval, trace, check, bench.

Exit codes: 0 success, 1 usage or domain error, 2 numeric failure
(non-convergence or a violated check).  Delimited output is plain CSV
with 17-significant-digit floats so values round-trip exactly; comment
lines start with '#' and appear only before the header row.
"""

import argparse
import statistics
import sys
import time

from .inequalities import (
    GAP_TOL,
    PAIR_TOL,
    amgm_check,
    concavity_check,
    sweep_amgm,
    sweep_concavity,
    sweep_tangent_at,
    sweep_tangent_line,
    tangent_line_gap,
)
from .oracles import QuadratureConfig, double_integral_residual, reference_log
from .series import EvalConfig, eval_log, trace

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NUMERIC = 2

INTEGRAL_TOL = 1e-8
INTEGRAL_GRID = (0.25, 0.5, 2.0, 5.0, 10.0)
CONSTANT_SCALES = (1e-6, 1e-3, 1.0, 7.0, 100.0)

TIMING_NOTE = "# timing: perf_counter, one warm-up eval per point, median over 5 batches of 1000 evaluations"


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors; the contract reserves 2 for
    # numeric failures, so remap to 1.
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _fmt(value: float) -> str:
    return format(value, ".17g")


def _fmt_bool(flag: bool) -> str:
    return "true" if flag else "false"


def _parse_values(text: str) -> list[float]:
    try:
        values = [float(part) for part in text.split(",") if part.strip() != ""]
    except ValueError as exc:
        raise ValueError(f"--values must be comma-separated numbers: {exc}") from None
    if not values:
        raise ValueError("--values must contain at least one number")
    return values


def _parse_grid(text: str) -> list[float]:
    parts = text.split(":")
    if len(parts) != 3:
        raise ValueError(f"--grid must look like lo:hi:count, got {text!r}")
    try:
        lo, hi, count = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError:
        raise ValueError(f"--grid must look like lo:hi:count with numeric fields, got {text!r}") from None
    for bound in (lo, hi):
        if not bound > 0:
            raise ValueError(f"--grid bounds must be positive, got {bound!r}")
    if count < 1:
        raise ValueError(f"--grid count must be >= 1, got {count}")
    if count == 1:
        return [lo]
    ratio = hi / lo
    points = [lo * ratio ** (i / (count - 1)) for i in range(count)]
    points[0], points[-1] = lo, hi  # pin endpoints against rounding drift
    return points


def _cmd_eval(args) -> int:
    config = EvalConfig(tol=args.tol, max_terms=args.max_terms)
    result = eval_log(args.x, config)
    print(f"log_value = {_fmt(result.log_value)}")
    print(f"residual = {_fmt(result.residual)}")
    print(f"terms_used = {result.terms_used}")
    print(f"tail_estimate = {_fmt(result.tail_estimate)}")
    print(f"converged = {_fmt_bool(result.converged)}")
    return EXIT_OK if result.converged else EXIT_NUMERIC


def _cmd_trace(args) -> int:
    rows = trace(args.x, args.n)
    base = args.x - 1.0
    header = ("k", "u_k", "term_k", "partial_sum_k", "diff_quotient_k", "telescope_defect")
    table = [
        (str(r.k), _fmt(r.u), _fmt(r.term), _fmt(r.partial_sum), _fmt(r.diff_quotient),
         _fmt((r.partial_sum + r.diff_quotient) - base))
        for r in rows
    ]
    if args.format == "csv":
        print(",".join(header))
        for row in table:
            print(",".join(row))
    else:
        widths = [max(len(h), *(len(row[i]) for row in table)) for i, h in enumerate(header)]
        print("  ".join(h.rjust(widths[i]) for i, h in enumerate(header)))
        for row in table:
            print("  ".join(cell.rjust(widths[i]) for i, cell in enumerate(row)))
    return EXIT_OK


def _print_sweep(report) -> None:
    print(
        f"{report.name}: checked={report.checked} min_margin={_fmt(report.min_margin)} "
        f"threshold={format(report.threshold, 'g')} violations={report.violations}"
    )


def _sweep_failures(reports) -> int:
    failed = False
    for report in reports:
        _print_sweep(report)
        if report.violations:
            args_, margin = report.first_violation
            print(f"FAIL: {report.name} at {args_!r} with margin {_fmt(margin)}")
            failed = True
    return EXIT_NUMERIC if failed else EXIT_OK


def _cmd_check_tangent(args) -> int:
    if args.x is not None:
        gap = tangent_line_gap(args.x)
        print(f"tangent_line_gap({_fmt(args.x)}) = {_fmt(gap)}")
        if gap < -GAP_TOL:
            print(f"FAIL: gap below {format(-GAP_TOL, 'g')}")
            return EXIT_NUMERIC
        print("PASS")
        return EXIT_OK
    status = _sweep_failures([
        sweep_tangent_line(seed=args.seed),
        sweep_tangent_at(seed=args.seed),
    ])
    if status == EXIT_OK:
        print("PASS")
    return status


def _cmd_check_concavity(args) -> int:
    if args.values is not None:
        parsed = _parse_values(args.values)
        if len(parsed) != 3:
            raise ValueError("--values for concavity must be x,y,lambda")
        x, y, lam = parsed
        margin = concavity_check(x, y, lam)
        print(f"concavity_check({_fmt(x)}, {_fmt(y)}, {_fmt(lam)}) = {_fmt(margin)}")
        if margin < -PAIR_TOL:
            print(f"FAIL: margin below {format(-PAIR_TOL, 'g')}")
            return EXIT_NUMERIC
        print("PASS")
        return EXIT_OK
    status = _sweep_failures([sweep_concavity(seed=args.seed)])
    if status == EXIT_OK:
        print("PASS")
    return status


def _cmd_check_amgm(args) -> int:
    if args.values is not None:
        report = amgm_check(_parse_values(args.values))
        print(f"arithmetic_mean = {_fmt(report.arithmetic_mean)}")
        print(f"geometric_mean = {_fmt(report.geometric_mean)}")
        print(f"holds = {_fmt_bool(report.holds)}")
        print(f"equality = {_fmt_bool(report.equality)}")
        if not report.holds:
            print("FAIL: geometric mean exceeds arithmetic mean beyond tolerance")
            return EXIT_NUMERIC
        print("PASS")
        return EXIT_OK
    status = _sweep_failures([sweep_amgm(seed=args.seed)])
    equality_failures = 0
    checked = 0
    for scale in CONSTANT_SCALES:
        for length in range(1, 17):
            checked += 1
            if not amgm_check([scale] * length).equality:
                equality_failures += 1
                if status == EXIT_OK:
                    print(f"FAIL: constant vector [{_fmt(scale)}] * {length} not flagged as equality")
                    status = EXIT_NUMERIC
    print(f"constant_vectors: checked={checked} equality_failures={equality_failures}")
    if status == EXIT_OK:
        print("PASS")
    return status


def _cmd_check_integral(args) -> int:
    config = QuadratureConfig(panels=args.panels)
    grid = [args.x] if args.x is not None else list(INTEGRAL_GRID)
    status = EXIT_OK
    for x in grid:
        quad = double_integral_residual(x, config)
        series_residual = x - 1.0 - eval_log(x).log_value
        diff = abs(quad - series_residual)
        print(
            f"x = {_fmt(x)}: quadrature = {_fmt(quad)}, series = {_fmt(series_residual)}, "
            f"|diff| = {format(diff, '.3e')}"
        )
        if diff > INTEGRAL_TOL:
            print(f"FAIL: disagreement above {format(INTEGRAL_TOL, 'g')}")
            status = EXIT_NUMERIC
    if status == EXIT_OK:
        print("PASS")
    return status


def _timed_eval(x: float, config: EvalConfig, reps: int = 1000, batches: int = 5) -> float:
    eval_log(x, config)
    samples = []
    for _ in range(batches):
        start = time.perf_counter()
        for _ in range(reps):
            eval_log(x, config)
        samples.append((time.perf_counter() - start) / reps)
    return statistics.median(samples)


def _cmd_bench(args) -> int:
    points = _parse_grid(args.grid)
    config = EvalConfig(tol=args.tol, max_terms=args.max_terms)
    rows = []
    all_converged = True
    for x in points:
        result = eval_log(x, config)
        ref = reference_log(x)
        abs_error = abs(result.log_value - ref)
        rel_error = abs_error / max(1.0, abs(ref))
        rows.append((x, result.terms_used, abs_error, rel_error, _timed_eval(x, config)))
        all_converged = all_converged and result.converged
    max_abs = max(r[2] for r in rows)
    max_rel = max(r[3] for r in rows)
    median_terms = statistics.median(r[1] for r in rows)
    if args.format == "csv":
        print(TIMING_NOTE)
        print("row,x,terms_used,abs_error,rel_error,time_per_eval_s")
        for x, terms, abs_error, rel_error, per_eval in rows:
            print(f"point,{_fmt(x)},{terms},{_fmt(abs_error)},{_fmt(rel_error)},{_fmt(per_eval)}")
        print(f"summary,,{_fmt(median_terms)},{_fmt(max_abs)},{_fmt(max_rel)},")
    else:
        for x, terms, abs_error, rel_error, per_eval in rows:
            print(
                f"x = {_fmt(x)}: terms_used = {terms}, abs_error = {format(abs_error, '.3e')}, "
                f"rel_error = {format(rel_error, '.3e')}, time_per_eval = {format(per_eval, '.3e')} s"
            )
        print(
            f"summary: points = {len(rows)}, max_abs_error = {format(max_abs, '.3e')}, "
            f"max_rel_error = {format(max_rel, '.3e')}, median_terms = {_fmt(median_terms)}"
        )
    return EXIT_OK if all_converged else EXIT_NUMERIC


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="logseries",
        description="Natural logarithm via its square-root decrement series: evaluate, trace, check, benchmark.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p_eval = sub.add_parser("eval", help="approximate log(x) adaptively")
    p_eval.add_argument("--x", type=float, required=True, help="argument, a positive real")
    p_eval.add_argument("--tol", type=float, default=1e-14, help="stopping tolerance (default 1e-14)")
    p_eval.add_argument("--max-terms", type=int, default=96, help="term budget (default 96)")
    p_eval.set_defaults(func=_cmd_eval)

    p_trace = sub.add_parser("trace", help="per-step table of decrements, terms, and partial sums")
    p_trace.add_argument("--x", type=float, required=True, help="argument, a positive real")
    p_trace.add_argument("--n", type=int, required=True, help="last step index (>= 0)")
    p_trace.add_argument("--format", choices=("human", "csv"), default="human")
    p_trace.set_defaults(func=_cmd_trace)

    p_check = sub.add_parser("check", help="verify a logarithm inequality or the quadrature oracle")
    check_sub = p_check.add_subparsers(dest="subcheck", required=True, parser_class=_Parser)

    p_tan = check_sub.add_parser("tangent", help="log(x) <= x - 1 and the general tangent bound")
    p_tan.add_argument("--x", type=float, default=None, help="single point; omit for a randomized sweep")
    p_tan.add_argument("--seed", type=int, default=42, help="sweep seed (default 42)")
    p_tan.set_defaults(func=_cmd_check_tangent)

    p_conc = check_sub.add_parser("concavity", help="chord never exceeds the curve")
    p_conc.add_argument("--values", default=None, help="x,y,lambda for a single check; omit for a sweep")
    p_conc.add_argument("--seed", type=int, default=42, help="sweep seed (default 42)")
    p_conc.set_defaults(func=_cmd_check_concavity)

    p_amgm = check_sub.add_parser("amgm", help="arithmetic mean dominates geometric mean")
    p_amgm.add_argument("--values", default=None, help="comma-separated positive values; omit for a sweep")
    p_amgm.add_argument("--seed", type=int, default=42, help="sweep seed (default 42)")
    p_amgm.set_defaults(func=_cmd_check_amgm)

    p_int = check_sub.add_parser("integral", help="series residual vs nested Simpson quadrature")
    p_int.add_argument("--x", type=float, default=None, help="single point; omit for the default grid")
    p_int.add_argument("--panels", type=int, default=1024, help="Simpson panels per axis (default 1024)")
    p_int.set_defaults(func=_cmd_check_integral)

    p_bench = sub.add_parser("bench", help="accuracy and timing over a log-spaced grid")
    p_bench.add_argument("--grid", required=True, help="lo:hi:count, log-spaced, endpoints inclusive")
    p_bench.add_argument("--tol", type=float, default=1e-14, help="stopping tolerance (default 1e-14)")
    p_bench.add_argument("--max-terms", type=int, default=96, help="term budget (default 96)")
    p_bench.add_argument("--format", choices=("human", "csv"), default="human")
    p_bench.set_defaults(func=_cmd_bench)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"logseries: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run() -> None:
    raise SystemExit(main())
