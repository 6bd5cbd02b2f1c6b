"""Unit tests for the decrement chain, terms, partial sums, and eval_log."""

import math

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from logseries.series import (
    EvalConfig,
    PositiveInput,
    decrement_step,
    difference_quotient,
    eval_log,
    iterate_decrements,
    partial_sum,
    tail_ratio,
    term,
    trace,
)

# Correctly rounded doubles of exact targets, frozen from 60-digit
# mpmath evaluations.
ROOT4_OF_TWO_MINUS_ONE = 0.18920711500272105  # 2**(1/4) - 1
SQRT_TWO_MINUS_ONE = 0.41421356237309503      # 2**(1/2) - 1
S2_AT_FOUR = 1.3431457505076199               # 1 + 2*(sqrt(2) - 1)**2
D2_AT_FOUR = 1.6568542494923801               # 4*(sqrt(2) - 1)


def test_positive_input_accepts_and_converts():
    p = PositiveInput(4)
    assert p.x == 4.0 and isinstance(p.x, float)
    assert float(p) == 4.0
    assert eval_log(PositiveInput(2.0)).log_value == eval_log(2.0).log_value


@pytest.mark.parametrize("bad", [0.0, -3.0, math.inf, -math.inf, math.nan])
def test_positive_input_rejects_nonpositive_and_nonfinite(bad):
    with pytest.raises(ValueError):
        PositiveInput(bad)


@pytest.mark.parametrize("bad", ["2", None, True, 2 + 0j])
def test_positive_input_rejects_non_reals(bad):
    with pytest.raises(TypeError):
        PositiveInput(bad)


def test_decrement_step_fixed_point_and_exact_cases():
    assert decrement_step(0.0) == 0.0
    # 3 -> sqrt(4) - 1 with every intermediate exact
    assert decrement_step(3.0) == 1.0
    assert decrement_step(-0.75) == -0.5


def test_decrement_step_tracks_fourth_root():
    # One step from sqrt(2) - 1 should land on 2**(1/4) - 1 to within an ulp or two.
    assert decrement_step(SQRT_TWO_MINUS_ONE) == pytest.approx(ROOT4_OF_TWO_MINUS_ONE, abs=2.5e-16)


def test_decrement_step_contracts_and_preserves_sign():
    for u in (1e-9, 0.25, 3.0, 80.0):
        v = decrement_step(u)
        assert 0.0 < v <= u / 2
    for u in (-0.9, -0.5, -1e-7):
        v = decrement_step(u)
        assert u < v < 0.0
        assert abs(v) < abs(u)


def test_decrement_step_domain_errors():
    for bad in (-1.0, -2.0, math.inf, math.nan):
        with pytest.raises(ValueError):
            decrement_step(bad)
    for bad in ("0.5", None, True):
        with pytest.raises(TypeError):
            decrement_step(bad)


def test_iterate_decrements_at_one_is_identically_zero():
    assert iterate_decrements(1.0, 3) == [(0, 0.0), (1, 0.0), (2, 0.0), (3, 0.0)]


def test_iterate_decrements_at_four():
    states = iterate_decrements(4.0, 2)
    assert [s.k for s in states] == [0, 1, 2]
    assert states[0].u == 3.0
    assert states[1].u == 1.0
    assert states[2].u == pytest.approx(SQRT_TWO_MINUS_ONE, abs=1e-15)


def test_iterate_decrements_below_half_seeds_from_roots():
    # 0.25 -> 0.5 in one square root; both leading subtractions are exact.
    states = iterate_decrements(0.25, 2)
    assert states[0].u == -0.75
    assert states[1].u == -0.5
    assert states[2].u == pytest.approx(0.25 ** 0.25 - 1.0, abs=1e-15)


def test_iterate_decrements_matches_recurrence_above_half():
    for x in (0.5, 0.9, 2.0, 10.0, 1e8):
        states = iterate_decrements(x, 30)
        u = x - 1.0
        assert states[0].u == u
        for state in states[1:]:
            u = decrement_step(u)
            assert state.u == u


def test_iterate_decrements_tracks_true_roots():
    # Oracle check against 50-digit arithmetic, including x far below 1/2
    # where the chain is seeded from direct square roots.
    with mpmath.workdps(50):
        for x in (1e-8, 0.3, 0.5, 7.0, 4e5):
            states = iterate_decrements(x, 50)
            for k in (0, 3, 10, 27, 50):
                expected = float(mpmath.root(mpmath.mpf(x), 2 ** k) - 1)
                assert states[k].u == pytest.approx(expected, rel=5e-13, abs=1e-18)


def test_iterate_decrements_validation():
    with pytest.raises(ValueError):
        iterate_decrements(4.0, -1)
    with pytest.raises(TypeError):
        iterate_decrements(4.0, 1.5)
    with pytest.raises(ValueError):
        iterate_decrements(0.0, 3)


def test_term_examples():
    assert term(1, 1.0) == 1.0
    assert term(1, 3.0) == 9.0
    assert term(5, 0.0) == 0.0
    # doubling k scales by exactly 2: ldexp arithmetic is exact
    assert term(7, 0.3) == 2.0 * term(6, 0.3)


def test_term_matches_extended_precision():
    # One multiply plus an exact power-of-two scale is correctly rounded,
    # so the result must equal the rounded exact value.
    with mpmath.workdps(50):
        for k, u in ((2, 0.41421356237309503), (2, 0.41421356237309515), (11, -0.125)):
            expected = float(mpmath.ldexp(mpmath.mpf(u) ** 2, k - 1))
            assert term(k, u) == expected


def test_term_validation():
    for bad_k in (0, -3):
        with pytest.raises(ValueError):
            term(bad_k, 0.5)
    with pytest.raises(TypeError):
        term(1.5, 0.5)
    with pytest.raises(ValueError):
        term(2, -1.0)
    with pytest.raises(ValueError):
        term(2, math.inf)


def test_partial_sum_examples():
    assert partial_sum(3.7, 0) == 0.0
    assert partial_sum(4.0, 1) == 1.0
    assert partial_sum(4.0, 2) == pytest.approx(S2_AT_FOUR, abs=5e-16)
    assert partial_sum(1.0, 40) == 0.0


def test_partial_sum_nonnegative_and_monotone():
    for x in (0.3, 2.0, 50.0):
        previous = 0.0
        for n in range(41):
            s = partial_sum(x, n)
            assert s >= 0.0
            assert s >= previous
            previous = s


def test_partial_sum_converges_to_residual():
    for x in (0.2, 0.5, 2.0, 9.0):
        assert partial_sum(x, 60) == pytest.approx(x - 1.0 - math.log(x), rel=1e-12, abs=1e-15)


def test_difference_quotient_examples():
    assert difference_quotient(4.0, 0) == 3.0
    assert difference_quotient(4.0, 1) == 2.0
    assert difference_quotient(4.0, 2) == pytest.approx(D2_AT_FOUR, abs=1e-15)
    assert difference_quotient(1.0, 17) == 0.0


def test_difference_quotient_converges_to_log():
    for x in (1e-3, 0.5, 2.0, 1e3):
        d = difference_quotient(x, 60)
        assert d == pytest.approx(math.log(x), rel=1e-13, abs=1e-15)


def test_telescoping_identity_per_row():
    for x in (0.07, 0.5, 4.0, 250.0):
        scale = max(1.0, abs(x - 1.0))
        for n in (1, 10, 40):
            defect = partial_sum(x, n) + difference_quotient(x, n) - (x - 1.0)
            assert abs(defect) <= 1e-13 * scale


def test_eval_log_at_one_stops_immediately():
    result = eval_log(1.0)
    assert result.log_value == 0.0
    assert result.residual == 0.0
    assert result.terms_used == 1
    assert result.tail_estimate == 0.0
    assert result.converged is True


def test_eval_log_matches_reference():
    for x in (0.5, 4.0):
        result = eval_log(x)
        assert result.converged
        assert result.log_value == pytest.approx(math.log(x), abs=1e-13)


def test_eval_log_result_consistency():
    for x in (0.01, 0.7, 3.0, 500.0):
        result = eval_log(x)
        assert result.converged
        assert result.residual >= 0.0
        assert result.tail_estimate <= 1e-14
        assert result.log_value + result.residual == pytest.approx(x - 1.0, abs=1e-13 * max(1.0, abs(x - 1.0)))


def test_eval_log_nonconvergence_is_reported_not_raised():
    result = eval_log(2.0, EvalConfig(tol=1e-30))
    assert result.converged is False
    assert result.terms_used == 96
    assert result.tail_estimate > 1e-30
    # the estimate is still the best the budget allows
    assert result.log_value == pytest.approx(math.log(2.0), rel=1e-12)


def test_eval_log_respects_term_budget():
    result = eval_log(10.0, EvalConfig(tol=1e-14, max_terms=5))
    assert result.terms_used == 5
    assert result.converged is False


def test_eval_config_defaults_and_validation():
    config = EvalConfig()
    assert config.tol == 1e-14
    assert config.max_terms == 96
    assert config.safety_factor == 2.0
    for kwargs in ({"tol": 0.0}, {"tol": -1e-10}, {"tol": math.nan},
                   {"max_terms": 0}, {"max_terms": -2}, {"max_terms": 2.5},
                   {"safety_factor": 0.5}, {"safety_factor": math.inf}):
        with pytest.raises(ValueError):
            EvalConfig(**kwargs)


def test_tail_ratio_examples():
    # term_1(4) = 1, so the scaled term is exactly 2
    assert tail_ratio(4.0, 1) == 2.0
    assert tail_ratio(2.0, 40) == pytest.approx(0.5 * math.log(2.0) ** 2, abs=1e-7)
    assert tail_ratio(0.5, 40) == pytest.approx(0.5 * math.log(0.5) ** 2, abs=1e-7)
    assert tail_ratio(math.exp(2.0), 40) == pytest.approx(2.0, abs=1e-6)


def test_tail_ratio_domain():
    with pytest.raises(ValueError):
        tail_ratio(1.0, 10)
    with pytest.raises(ValueError):
        tail_ratio(2.0, 0)


def test_term_ratio_near_half_at_k50():
    # The computed ratio saturates at exactly 1/2 once 1 + u has no spare
    # bits, so the window must be closed on both sides.
    for x in (0.5, 2.0, 10.0):
        states = iterate_decrements(x, 51)
        ratio = term(51, states[51].u) / term(50, states[50].u)
        assert 0.5 - 1e-6 <= ratio <= 0.5 + 1e-6


def test_term_ratio_strictly_below_half_before_saturation():
    # Strictness is a real-arithmetic fact; in doubles it survives only
    # while u is large enough that sqrt(1 + u) + 1 > 2 after rounding
    # (roughly u > 5e-16, i.e. k below ~50 for these x).
    for x in (2.0, 10.0, 100.0):
        states = iterate_decrements(x, 41)
        for k in range(1, 41):
            ratio = term(k + 1, states[k + 1].u) / term(k, states[k].u)
            assert ratio < 0.5


def test_trace_rows_at_four():
    rows = trace(4.0, 2)
    assert rows[0] == (0, 3.0, 0.0, 0.0, 3.0)
    assert rows[1] == (1, 1.0, 1.0, 1.0, 2.0)
    assert rows[2].k == 2
    assert rows[2].partial_sum == pytest.approx(S2_AT_FOUR, abs=5e-16)
    assert rows[2].diff_quotient == pytest.approx(D2_AT_FOUR, abs=1e-15)


def test_trace_at_one_is_all_zero():
    for row in trace(1.0, 5):
        assert (row.u, row.term, row.partial_sum, row.diff_quotient) == (0.0, 0.0, 0.0, 0.0)


def test_trace_single_row_and_validation():
    rows = trace(9.0, 0)
    assert len(rows) == 1 and rows[0] == (0, 8.0, 0.0, 0.0, 8.0)
    with pytest.raises(ValueError):
        trace(9.0, -1)


@settings(max_examples=150, deadline=None)
@given(st.floats(min_value=1e-3, max_value=1e3))
def test_property_telescoping(x):
    defect = partial_sum(x, 25) + difference_quotient(x, 25) - (x - 1.0)
    assert abs(defect) <= 1e-13 * max(1.0, abs(x - 1.0))


@settings(max_examples=150, deadline=None)
@given(st.floats(min_value=1e-6, max_value=1e6))
def test_property_eval_log_accuracy(x):
    result = eval_log(x)
    assert result.converged
    ref = math.log(x)
    assert abs(result.log_value - ref) <= 1e-12 * max(1.0, abs(ref))


@settings(max_examples=200, deadline=None)
@given(st.floats(min_value=-0.999999, max_value=1e6))
def test_property_decrement_step_contracts(u):
    v = decrement_step(u)
    assert v > -1.0
    if u == 0.0:
        assert v == 0.0
    else:
        assert math.copysign(1.0, v) == math.copysign(1.0, u)
        assert abs(v) < abs(u)


@settings(max_examples=100, deadline=None)
@given(st.floats(min_value=1e-4, max_value=1e4))
def test_property_eval_log_deterministic(x):
    assert eval_log(x) == eval_log(x)
