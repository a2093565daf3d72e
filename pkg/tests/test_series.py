import pytest
from hypothesis import given, settings, strategies as st
from mpmath import mp, mpf

from kgconst import (
    DomainError,
    MaxTermsExceeded,
    PrecisionContext,
    const_L,
    const_pi,
    double_series,
    double_series_partial,
    fourier_a,
    fourier_a_quadrature,
    inner_tail,
    inner_term,
    limit_S,
    parseval_closure,
    partial_sum_S,
    recurrence_check,
)
from kgconst.series import inner_term_magnitude, smooth_tail_magnitude


class TestInnerTerm:
    def test_first_terms_exact(self, ctx30):
        assert abs(inner_term(1, ctx30) - mpf(2) / 3) < mpf("1e-38")
        assert abs(inner_term(2, ctx30) - mpf(-2) / 35) < mpf("1e-38")

    def test_index_zero_rejected(self, ctx30):
        with pytest.raises(DomainError):
            inner_term(0, ctx30)

    @given(k=st.integers(min_value=1, max_value=100))
    @settings(max_examples=40, deadline=None)
    def test_magnitude_closed_form(self, k):
        ctx = PrecisionContext(digits=30)
        with mp.workdps(60):
            expected = mpf(2) / ((4 * k - 3) * (4 * k - 1))
            assert abs(abs(inner_term(k, ctx)) - expected) < mpf("1e-38")


class TestPartialSums:
    def test_small_sums_exact(self, ctx30):
        assert partial_sum_S(0, ctx30) == 0
        assert abs(partial_sum_S(1, ctx30) - mpf(2) / 3) < mpf("1e-38")
        assert abs(partial_sum_S(2, ctx30) - mpf(64) / 105) < mpf("1e-38")

    def test_large_sum_within_remainder_bound(self, ctx30):
        n = 10 ** 4
        bound = mpf(2) / ((4 * n + 1) * (4 * n + 3))
        assert abs(partial_sum_S(n, ctx30) - limit_S(ctx30)) <= bound


class TestLimit:
    def test_value(self):
        ctx = PrecisionContext(digits=10)
        assert mp.nstr(limit_S(ctx), 8) == "0.62322524"
        with ctx.workprec():
            closed = mp.sqrt(2) / 2 * mp.log(1 + mp.sqrt(2))
        assert abs(limit_S(ctx) - closed) < ctx.tolerance

    def test_alternating_envelope(self, ctx30):
        S = limit_S(ctx30)
        for n in range(1, 51):
            gap = S - partial_sum_S(n, ctx30)
            # remainder has the sign of the first omitted term and is
            # bounded by it in magnitude
            first_omitted = inner_term(n + 1, ctx30)
            assert abs(gap) <= abs(first_omitted)
            assert mp.sign(gap) == mp.sign(first_omitted)

    def test_tail_formula_consistent_at_zero(self, ctx30):
        lhs = 8 * mp.sqrt(2) / mp.pi * limit_S(ctx30)
        rhs = 8 / const_pi(ctx30) * const_L(ctx30)
        assert abs(lhs - rhs) < mpf("1e-35")


class TestInnerTail:
    def test_tail_at_zero_is_limit(self, ctx30):
        t0 = inner_tail(0, ctx30)
        assert abs(t0.value - limit_S(ctx30)) < mpf("1e-38")

    def test_t1_negative_pin(self, ctx30):
        assert inner_tail(1, ctx30).value < 0

    def test_t1_against_accelerated_oracle(self, ctx30):
        # independent tail oracle: mpmath series acceleration of the raw sum
        with mp.workdps(40):
            oracle = mp.nsum(
                lambda k: (-1) ** k * (mpf(1) / (4 * k - 1) - mpf(1) / (4 * k - 3)),
                [2, mp.inf])
        assert abs(inner_tail(1, ctx30).value - oracle) < mpf("1e-30")

    def test_closed_vs_direct_routes(self):
        ctx = PrecisionContext(digits=20, tolerance=mpf("1e-8"))
        for n in range(0, 201):
            closed = inner_tail(n, ctx, method="closed")
            direct = inner_tail(n, ctx, method="direct")
            assert abs(closed.value - direct.value) <= direct.tail_bound
            assert direct.converged

    def test_direct_route_respects_cap(self):
        ctx = PrecisionContext(digits=30)
        with pytest.raises(MaxTermsExceeded):
            inner_tail(1, ctx, method="direct", max_terms=100)

    def test_smooth_magnitude_matches_closed(self, ctx30):
        for n in (1, 3, 10, 250):
            closed = abs(inner_tail(n, ctx30).value)
            assert abs(closed - smooth_tail_magnitude(n, ctx30)) < mpf("1e-35")


class TestFourierCoefficients:
    def test_a0(self, ctx30):
        a0 = fourier_a(0, ctx30)
        assert a0.n == 0
        assert mp.nstr(a0.value, 8) == "2.2443994"

    def test_a1_sign_and_value(self, ctx30):
        a1 = fourier_a(1, ctx30).value
        expected = 8 * mp.sqrt(2) / mp.pi * (limit_S(ctx30) - mpf(2) / 3)
        assert abs(a1 - expected) < mpf("1e-35")
        assert mp.nstr(a1, 5) == "-0.15644"

    def test_closed_form_vs_quadrature(self, ctx30):
        for n in range(0, 9):
            closed = fourier_a(n, ctx30).value
            quad = fourier_a_quadrature(n, ctx30).value
            assert abs(closed - quad) < mpf(10) ** -(ctx30.digits - 5)

    def test_decay_envelope(self, ctx30):
        for n in range(1, 60):
            bound = 8 * mp.sqrt(2) / mp.pi * inner_term_magnitude(n + 1, ctx30)
            assert abs(fourier_a(n, ctx30).value) <= bound


class TestRecurrence:
    @pytest.mark.parametrize("n", [1, 2, 7, 50, 100])
    def test_residual_below_tolerance(self, n, ctx40):
        assert recurrence_check(n, ctx40) < mpf("1e-30")


class TestDoubleSeries:
    def test_value_against_boxed_closed_form(self, ctx30):
        ds = double_series(ctx30)
        with ctx30.workprec():
            closed = mp.pi / 16 - mp.log(1 + mp.sqrt(2)) ** 2 / 4
        assert ds.converged
        assert ds.tail_bound < ctx30.tolerance
        assert abs(ds.value - closed) < ctx30.tolerance

    def test_magnitude(self):
        ctx = PrecisionContext(digits=10)
        assert mp.nstr(double_series(ctx).value, 6) == "0.00214469"

    def test_bound_driven_term_count_for_1e12(self):
        ctx = PrecisionContext(digits=12)
        ds = double_series(ctx)
        assert ds.terms_used <= 10 ** 5

    def test_accelerated_vs_bruteforce_oracle(self, ctx30):
        brute = double_series_partial(10 ** 5, ctx30)
        assert abs(double_series(ctx30).value - brute) < mpf("1e-15")

    def test_pure_truncation_cap(self, ctx30):
        with pytest.raises(MaxTermsExceeded):
            double_series(ctx30, accelerate=False, max_terms=1000)

    def test_pure_and_accelerated_routes_agree(self):
        ctx = PrecisionContext(digits=14)
        pure = double_series(ctx, accelerate=False)
        accel = double_series(PrecisionContext(digits=30))
        assert abs(pure.value - accel.value) < ctx.tolerance

    def test_determinism(self, ctx30):
        a = double_series(ctx30)
        b = double_series(ctx30)
        assert mp.nstr(a.value, 30) == mp.nstr(b.value, 30)


class TestParsevalClosure:
    def test_equals_8_over_pi(self, ctx30):
        pc = parseval_closure(ctx30)
        assert mp.nstr(pc.value, 12) == "2.54647908947"
        assert abs(pc.value - 8 / const_pi(ctx30)) < mpf("1e-25")

    def test_exact_relation_to_double_series(self, ctx30):
        pc = parseval_closure(ctx30)
        a0 = fourier_a(0, ctx30).value
        with ctx30.workprec():
            combined = a0 ** 2 / 2 + 128 / mp.pi ** 2 * double_series(ctx30).value
        assert abs(pc.value - combined) < ctx30.tolerance
