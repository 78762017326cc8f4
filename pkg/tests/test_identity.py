import random
from math import isqrt

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mobiuslab import sieve_moebius
from mobiuslab.identity import (
    bootstrap_identity,
    delta_divides,
    identity_terms,
    moebius_via_identity,
    moebius_via_identity_coprime,
    moebius_via_identity_odd,
)


class TestDeltaDivides:
    def test_fixtures(self):
        assert delta_divides(6, 3) == 1
        assert delta_divides(6, 4) == 0
        assert delta_divides(36, 36) == 1

    def test_zero_divisor_rejected(self):
        with pytest.raises(ValueError):
            delta_divides(6, 0)

    @given(n=st.integers(1, 10**6), d=st.integers(1, 10**4))
    def test_matches_modulo(self, n, d):
        assert delta_divides(n, d) == (1 if n % d == 0 else 0)


class TestIdentityTerms:
    def test_terms_match_pair_grid_semantics(self, table_10k):
        for n in range(2, 400):
            term_set = identity_terms(n, table_10k)
            assert term_set.cutoff == isqrt(n)
            for t in term_set.terms:
                assert 1 <= t.i <= term_set.cutoff
                assert 1 <= t.j <= term_set.cutoff
                assert t.coefficient != 0
                assert t.fired == (n % (t.i * t.j) == 0)

    def test_full_grid_agrees_with_fast_path(self, table_10k):
        # the naive pair enumeration and the divisor walk are independent routes
        for n in range(2, 600):
            assert identity_terms(n, table_10k).value() == moebius_via_identity(n, table_10k)


class TestMoebiusViaIdentity:
    def test_single_term_at_two(self, table_10k):
        assert moebius_via_identity(2, table_10k) == -1

    def test_four_terms_cancel_at_four(self, table_10k):
        # pairs over {1,2}^2 give 1 - 1 - 1 + 1
        assert moebius_via_identity(4, table_10k) == 0

    def test_nine(self, table_10k):
        # (1,1), (1,3), (3,1), (3,3) give 1 - 2 + 1
        assert moebius_via_identity(9, table_10k) == 0

    def test_matches_sieve_exhaustively(self, table_10k):
        values = table_10k.values
        for n in range(2, 10**4 + 1):
            assert moebius_via_identity(n, table_10k) == int(values[n])

    def test_small_n_rejected(self, table_10k):
        with pytest.raises(ValueError):
            moebius_via_identity(1, table_10k)

    def test_insufficient_prefix_names_cutoff(self):
        small = sieve_moebius(10)
        with pytest.raises(ValueError, match="up to 31"):
            moebius_via_identity(1000, small)


class TestOddRestricted:
    def test_fixtures(self, table_10k):
        assert moebius_via_identity_odd(3, table_10k) == -1
        assert moebius_via_identity_odd(9, table_10k) == 0
        # fired pairs (1,1), (1,3), (3,1): -(1 - 1 - 1) = +1
        assert moebius_via_identity_odd(15, table_10k) == 1

    def test_even_n_rejected(self, table_10k):
        with pytest.raises(ValueError):
            moebius_via_identity_odd(10, table_10k)

    def test_matches_general_form_on_odds(self, table_10k):
        for n in range(3, 10**4 + 1, 2):
            assert moebius_via_identity_odd(n, table_10k) == int(table_10k.values[n])


class TestCoprimeRestricted:
    def test_prime_reduces_to_single_term(self, table_10k):
        assert moebius_via_identity_coprime(7, {2, 3, 5}, table_10k) == -1

    def test_fixtures(self, table_10k):
        # indices coprime to 6 up to 5: (1,1), (1,5), (5,1), (5,5) give 1 - 2 + 1
        assert moebius_via_identity_coprime(25, {2, 3}, table_10k) == 0
        # fired pairs (1,1), (1,5), (5,1)
        assert moebius_via_identity_coprime(35, {2, 3}, table_10k) == 1

    def test_shared_factor_rejected(self, table_10k):
        with pytest.raises(ValueError):
            moebius_via_identity_coprime(14, {2, 3}, table_10k)

    def test_restriction_is_conservative(self, table_10k):
        rng = random.Random(7)
        for excluded in ({2}, {2, 3}, {2, 3, 5}):
            checked = 0
            while checked < 120:
                n = rng.randrange(2, 10**4)
                if any(n % p == 0 for p in excluded):
                    continue
                value = moebius_via_identity_coprime(n, excluded, table_10k)
                assert value == int(table_10k.values[n])
                checked += 1


class TestBootstrap:
    def test_first_four_values(self):
        assert bootstrap_identity(4).values[1:].tolist() == [1, -1, -1, 0]

    def test_value_at_ten(self):
        assert bootstrap_identity(10).values[10] == 1

    def test_matches_sieve_at_scale(self, table_10k):
        rebuilt = bootstrap_identity(10**4)
        assert np.array_equal(rebuilt.values, table_10k.values)

    def test_tiny_limit_rejected(self):
        with pytest.raises(ValueError):
            bootstrap_identity(1)


class TestEventFrequency:
    def test_delta_firing_rate_matches_reciprocal(self):
        # firing frequency of the (i, j) indicator over n <= 10^6 is 1/(i*j)
        big = 10**6
        n_values = np.arange(1, big + 1, dtype=np.int64)
        rate = {}
        for product in range(1, 101):
            rate[product] = np.count_nonzero(n_values % product == 0) / big
        for i in range(1, 101):
            for j in range(1, 100 // i + 1):
                assert abs(rate[i * j] - 1 / (i * j)) < 1e-4

    @given(n=st.integers(1, 10**6), i=st.integers(1, 10), j=st.integers(1, 10))
    @settings(max_examples=100)
    def test_indicator_agrees_with_delta_divides(self, n, i, j):
        assert delta_divides(n, i * j) in (0, 1)
        assert delta_divides(n, i * j) == (n % (i * j) == 0)
