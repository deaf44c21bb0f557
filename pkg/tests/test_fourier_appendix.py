import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from logsine.fourier_appendix import (
    FourierPartialSum,
    logsin_partial_sum,
    logsin_series_partial,
    logsine_via_fourier,
    parseval_logsquared,
    sawtooth_partial_sum,
    sawtooth_series_partial,
)
from logsine.logsine_closed_form import logsine_symbolic
from logsine.quadrature_oracle import cosine_moment

PI3_OVER_24 = 1.2919281950124926


class TestLogsinSeries:
    def test_single_term_at_pi(self):
        # -cos(pi)/1 = 1
        assert logsin_series_partial(math.pi, 1) == pytest.approx(1.0, abs=1e-15)

    def test_alternating_limit_at_pi(self):
        # target log(2 |sin(pi/2)|) = log 2
        got = logsin_series_partial(math.pi, 10 ** 4)
        assert abs(got - math.log(2)) <= 1e-3

    def test_half_pi(self):
        got = logsin_series_partial(math.pi / 2, 10 ** 4)
        assert abs(got - 0.5 * math.log(2)) <= 1e-3

    @pytest.mark.parametrize(
        "theta", [0.0, 2 * math.pi, -0.5, 7.0, 1e-10, 2 * math.pi - 1e-10]
    )
    def test_lattice_and_range_rejection(self, theta):
        with pytest.raises(ValueError):
            logsin_series_partial(theta, 10)

    def test_just_inside_guard_is_accepted(self):
        logsin_series_partial(1e-8, 10)

    def test_rejects_nonpositive_terms(self):
        with pytest.raises(ValueError):
            logsin_series_partial(1.0, 0)

    @settings(deadline=None, max_examples=40)
    @given(
        st.floats(0.05, 2 * math.pi - 0.05),
        st.integers(1, 3000),
    )
    def test_increment_is_next_term(self, theta, terms):
        step = logsin_series_partial(theta, terms + 1) - logsin_series_partial(
            theta, terms
        )
        expected = -math.cos((terms + 1) * theta) / (terms + 1)
        assert abs(step - expected) <= 1e-11


class TestSawtoothSeries:
    def test_symmetry_point(self):
        for terms in (1, 7, 100):
            assert abs(sawtooth_series_partial(math.pi, terms)) <= 1e-12

    def test_quarter_points(self):
        assert abs(sawtooth_series_partial(math.pi / 2, 10 ** 4) + math.pi / 4) <= 1e-3
        assert abs(sawtooth_series_partial(3 * math.pi / 2, 10 ** 4) - math.pi / 4) <= 1e-3

    def test_odd_symmetry_about_pi(self):
        for theta in (0.3, 1.1, 2.9):
            left = sawtooth_series_partial(math.pi - theta, 500)
            right = sawtooth_series_partial(math.pi + theta, 500)
            assert left == pytest.approx(-right, abs=1e-12)

    def test_lattice_rejection(self):
        with pytest.raises(ValueError):
            sawtooth_series_partial(2 * math.pi, 10)


class TestPartialSumObjects:
    def test_fields_and_call(self):
        ps = logsin_partial_sum(100)
        assert isinstance(ps, FourierPartialSum)
        assert ps.terms == 100
        assert ps(math.pi) == logsin_series_partial(math.pi, 100)
        assert ps.evaluate(1.0) == logsin_series_partial(1.0, 100)

    def test_sawtooth_wrapper(self):
        ps = sawtooth_partial_sum(64)
        assert ps(2.0) == sawtooth_series_partial(2.0, 64)

    def test_deterministic_at_fixed_angle(self):
        ps = logsin_partial_sum(1000)
        assert ps(2.2) == ps(2.2)


class TestParseval:
    def test_single_term(self):
        assert parseval_logsquared(1) == pytest.approx(math.pi / 4, abs=1e-15)

    def test_limit(self):
        assert abs(parseval_logsquared(10 ** 6) - PI3_OVER_24) <= 1e-6

    def test_strictly_increasing_bounded(self):
        ladder = [parseval_logsquared(n) for n in (1, 2, 5, 10, 100, 1000, 10 ** 4)]
        assert all(a < b for a, b in zip(ladder, ladder[1:]))
        assert all(v < PI3_OVER_24 + 1e-12 for v in ladder)

    def test_tail_scale(self):
        # tail after N terms is below (pi/4)/N
        n = 1000
        assert PI3_OVER_24 - parseval_logsquared(n) <= math.pi / 4 / n

    def test_rejects_nonpositive_terms(self):
        with pytest.raises(ValueError):
            parseval_logsquared(0)


class TestRouteEquivalence:
    def test_field_by_field(self):
        for n in range(13):
            assert logsine_via_fourier(n) == logsine_symbolic(n)

    def test_n2_structure(self):
        sym = logsine_via_fourier(2)
        assert sym.zeta_terms == logsine_symbolic(2).zeta_terms
        assert len(sym.zeta_terms) == 1

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            logsine_via_fourier(-1)

    @pytest.mark.parametrize("n", [4, 7])
    def test_terminal_moments_certified_zero(self, n):
        # the cadence discards its per-l terminal term; the oracle confirms
        # that term's integral vanishes at the parity-matching power
        power = 0 if n % 2 == 0 else 1
        for l in (1, 2, 3, 4):
            approx = cosine_moment(l, power)
            assert abs(approx.value) <= approx.abs_error <= 1e-12
