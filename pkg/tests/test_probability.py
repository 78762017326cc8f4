import math
import random
from fractions import Fraction
from math import isqrt

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mobiuslab import sieve_moebius
from mobiuslab.probability import (
    delta_prob,
    density_limits,
    harmonic_series,
    harmonic_series_many,
    interval_of,
    prob_triple_even,
    prob_triple_general,
    prob_triple_odd,
    triple_from_series,
)

F = Fraction


class TestHarmonicSeries:
    def test_cutoff_one(self, table_10k):
        s = harmonic_series(1, table_10k)
        assert (s.m, s.m_odd, s.s2, s.s2_odd) == (1, 1, 1, 1)

    def test_cutoff_two(self, table_10k):
        s = harmonic_series(2, table_10k)
        assert s.m == F(1, 2)
        assert s.s2 == F(3, 4)

    def test_cutoff_three(self, table_10k):
        # 1 - 1/2 - 1/3, 1 - 1/3, 1 - 1/4 - 1/9, 1 - 1/9
        s = harmonic_series(3, table_10k)
        assert (s.m, s.m_odd, s.s2, s.s2_odd) == (F(1, 6), F(2, 3), F(23, 36), F(8, 9))

    def test_incremental_consistency(self, table_10k):
        bank = harmonic_series_many(range(1, 201), table_10k)
        for k in range(2, 201):
            mu_k = int(table_10k.values[k])
            assert bank[k].m == bank[k - 1].m + F(mu_k, k)
            assert bank[k].s2 == bank[k - 1].s2 + F(mu_k, k * k)
            odd_term = F(mu_k, k) if k % 2 else 0
            assert bank[k].m_odd == bank[k - 1].m_odd + odd_term

    def test_many_matches_single(self, table_10k):
        bank = harmonic_series_many([5, 50, 500], table_10k)
        for k in (5, 50, 500):
            assert bank[k] == harmonic_series(k, table_10k)

    def test_insufficient_table(self):
        with pytest.raises(ValueError):
            harmonic_series(100, sieve_moebius(10))

    def test_tail_bounds(self, table_10k):
        # |s2_K - 6/pi^2| and |s2_odd_K - 8/pi^2| are below the 1/K tail bound
        pi2 = math.pi**2
        for k in (100, 1000, 10**4):
            s = harmonic_series(k, table_10k)
            assert abs(float(s.s2) - 6 / pi2) <= 1 / k
            assert abs(float(s.s2_odd) - 8 / pi2) <= 1 / k

    def test_m_squared_becomes_small(self, table_10k):
        for k in (1000, 3163, 10**4):
            assert float(harmonic_series(k, table_10k).m) ** 2 <= 1e-2


class TestTripleFixtures:
    def test_interval_two_to_four(self, table_10k):
        for n in (2, 3):
            t = prob_triple_general(n, table_10k)
            assert (t.p_minus, t.p_plus, t.p_zero) == (1, 0, 0)

    def test_interval_four_to_nine(self, table_10k):
        for n in range(4, 9):
            t = prob_triple_general(n, table_10k)
            assert (t.p_minus, t.p_plus, t.p_zero) == (F(1, 2), F(1, 4), F(1, 4))

    def test_interval_nine_to_twentyfive(self, table_10k):
        for n in range(9, 25):
            t = prob_triple_general(n, table_10k)
            assert (t.p_minus, t.p_plus, t.p_zero) == (F(1, 3), F(11, 36), F(13, 36))

    def test_odd_triples(self, table_10k):
        t = prob_triple_odd(3, table_10k)
        assert (t.p_minus, t.p_plus, t.p_zero) == (1, 0, 0)
        for n in (5, 7):
            t = prob_triple_odd(n, table_10k)
            assert (t.p_minus, t.p_plus, t.p_zero) == (1, 0, 0)
        for n in (9, 11, 13, 23):
            t = prob_triple_odd(n, table_10k)
            assert (t.p_minus, t.p_plus, t.p_zero) == (F(2, 3), F(2, 9), F(1, 9))

    def test_even_triples(self, table_10k):
        t = prob_triple_even(2, table_10k)
        assert (t.p_minus, t.p_plus, t.p_zero) == (1, 0, 0)
        for n in (4, 6, 8):
            t = prob_triple_even(n, table_10k)
            assert (t.p_minus, t.p_plus, t.p_zero) == (0, F(1, 2), F(1, 2))
        for n in (10, 12, 24):
            t = prob_triple_even(n, table_10k)
            assert (t.p_minus, t.p_plus, t.p_zero) == (0, F(7, 18), F(11, 18))

    def test_parity_validation(self, table_10k):
        with pytest.raises(ValueError):
            prob_triple_odd(10, table_10k)
        with pytest.raises(ValueError):
            prob_triple_even(11, table_10k)
        with pytest.raises(ValueError):
            prob_triple_general(1, table_10k)

    def test_series_cutoff_mismatch_rejected(self, table_10k):
        series = harmonic_series(4, table_10k)
        with pytest.raises(ValueError):
            prob_triple_general(10, table_10k, series=series)


class TestDeltaProb:
    def test_on_nine_to_twentyfive(self, table_10k):
        assert delta_prob(10, "general", table_10k) == F(1, 36)
        assert delta_prob(11, "odd", table_10k) == F(4, 9)
        # the even gap can go negative: 2/36 - 4/9
        assert delta_prob(10, "even", table_10k) == F(-7, 18)

    def test_parity_mismatch(self, table_10k):
        with pytest.raises(ValueError):
            delta_prob(10, "odd", table_10k)
        with pytest.raises(ValueError):
            delta_prob(11, "even", table_10k)
        with pytest.raises(ValueError):
            delta_prob(11, "???", table_10k)

    @given(n=st.integers(2, 10**4))
    @settings(max_examples=150, deadline=None)
    def test_gap_equals_triple_difference(self, table_10k, n):
        general = prob_triple_general(n, table_10k)
        assert general.p_minus - general.p_plus == delta_prob(n, "general", table_10k)
        if n % 2:
            odd = prob_triple_odd(n, table_10k)
            assert odd.p_minus - odd.p_plus == delta_prob(n, "odd", table_10k)
        else:
            even = prob_triple_even(n, table_10k)
            assert even.p_minus - even.p_plus == delta_prob(n, "even", table_10k)


class TestExactIdentities:
    @given(n=st.integers(2, 10**4))
    @settings(max_examples=150, deadline=None)
    def test_normalization_and_bounds(self, table_10k, n):
        triples = [prob_triple_general(n, table_10k)]
        triples.append(
            prob_triple_odd(n, table_10k) if n % 2 else prob_triple_even(n, table_10k)
        )
        for t in triples:
            assert t.p_minus + t.p_plus + t.p_zero == 1
            for p in (t.p_minus, t.p_plus, t.p_zero):
                assert 0 <= p <= 1

    def test_normalization_for_large_n(self, table_100k):
        rng = random.Random(2024)
        samples = [rng.randrange(2, 10**8) for _ in range(40)]
        bank = harmonic_series_many({isqrt(n) for n in samples}, table_100k)
        for n in samples:
            series = bank[isqrt(n)]
            t = prob_triple_general(n, table_100k, series=series)
            assert t.p_minus + t.p_plus + t.p_zero == 1

    def test_averaging_identity_for_even_n(self, table_10k):
        # even triple = 2 * general - odd-formula, all at the same cutoff
        for n in range(2, 2001, 2):
            series = harmonic_series(isqrt(n), table_10k)
            general = prob_triple_general(n, table_10k, series=series)
            odd_formula = triple_from_series(series, "odd")
            even = prob_triple_even(n, table_10k, series=series)
            assert even.p_minus == 2 * general.p_minus - odd_formula[0]
            assert even.p_plus == 2 * general.p_plus - odd_formula[1]
            assert even.p_zero == 2 * general.p_zero - odd_formula[2]

    def test_squarefree_probability_split(self, table_10k):
        # p_minus + p_plus collapses to the 1/i^2 partial sums
        for n in (7, 50, 300, 4000, 9999):
            series = harmonic_series(isqrt(n), table_10k)
            general = prob_triple_general(n, table_10k, series=series)
            assert general.p_minus + general.p_plus == series.s2
            if n % 2:
                odd = prob_triple_odd(n, table_10k, series=series)
                assert odd.p_minus + odd.p_plus == series.s2_odd
            else:
                even = prob_triple_even(n, table_10k, series=series)
                assert even.p_minus + even.p_plus == 2 * series.s2 - series.s2_odd


class TestIntervals:
    def test_fixtures(self, table_10k):
        assert interval_of(5, table_10k) == interval_of(8, table_10k)
        bracket = interval_of(5, table_10k)
        assert (bracket.lower, bracket.upper) == (4, 9)
        bracket = interval_of(30, table_10k)
        assert (bracket.lower, bracket.upper) == (25, 36)
        # 8 and 9 are squareful, so [49, 100) spans three squares
        bracket = interval_of(70, table_10k)
        assert (bracket.lower, bracket.upper) == (49, 100)

    def test_contains_n(self, table_10k):
        for n in range(2, 3000):
            bracket = interval_of(n, table_10k)
            assert bracket.lower <= n < bracket.upper

    def test_first_bracket_boundaries(self, table_10k):
        # squarefree 1,2,3,5,6,7,10,11,13,14,15 give the boundary squares
        seen = []
        for n in range(2, 225):
            bracket = interval_of(n, table_10k)
            pair = (bracket.lower, bracket.upper)
            if not seen or seen[-1] != pair:
                seen.append(pair)
        assert seen == [
            (1, 4), (4, 9), (9, 25), (25, 36), (36, 49), (49, 100),
            (100, 121), (121, 169), (169, 196), (196, 225),
        ]

    def test_endpoints_are_consecutive_squarefree_squares(self, table_10k):
        for n in range(2, 3000):
            bracket = interval_of(n, table_10k)
            a, b = isqrt(bracket.lower), isqrt(bracket.upper)
            assert a * a == bracket.lower and b * b == bracket.upper
            assert table_10k.values[a] != 0 and table_10k.values[b] != 0
            assert all(table_10k.values[c] == 0 for c in range(a + 1, b))

    def test_triples_constant_on_brackets(self, table_10k):
        previous = None
        for n in range(2, 2001):
            t = prob_triple_general(n, table_10k)
            triple = (t.p_minus, t.p_plus, t.p_zero)
            if previous is not None:
                root = isqrt(n)
                changed = root * root == n and table_10k.values[root] != 0
                if changed:
                    assert triple != previous
                else:
                    assert triple == previous
            previous = triple


class TestDensityLimits:
    def test_values_to_twelve_digits(self):
        limits = density_limits()
        assert limits["odd"].value == pytest.approx(0.810569469139, abs=5e-13)
        assert limits["even"].value == pytest.approx(0.405284734569, abs=5e-13)
        assert limits["all"].value == pytest.approx(0.607927101854, abs=5e-13)

    def test_odd_is_twice_even(self):
        limits = density_limits()
        assert limits["odd"].value == pytest.approx(2 * limits["even"].value, rel=1e-15)

    def test_expressions(self):
        limits = density_limits()
        assert limits["odd"].expression == "8/pi^2"
        assert limits["even"].expression == "4/pi^2"
        assert limits["all"].expression == "6/pi^2"
