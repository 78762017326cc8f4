"""Moebius/Mertens tables, delta-sum identity evaluation, exact value
probabilities, and coin-model randomness experiments."""

from mobiuslab.identity import (
    bootstrap_identity,
    delta_divides,
    identity_terms,
    moebius_via_identity,
    moebius_via_identity_coprime,
    moebius_via_identity_odd,
)
from mobiuslab.probability import (
    HarmonicMuSeries,
    IntervalBracket,
    ProbabilityTriple,
    delta_prob,
    density_limits,
    harmonic_series,
    harmonic_series_many,
    interval_of,
    prob_triple_even,
    prob_triple_general,
    prob_triple_odd,
)
from mobiuslab.sieve import (
    CorruptCacheError,
    MertensSeries,
    MoebiusTable,
    ResourceLimitError,
    load_table,
    mertens_series,
    moebius_at,
    save_table,
    sieve_moebius,
)
from mobiuslab.stochastic import (
    FrequencyReport,
    MertensWalkStats,
    TestReport,
    WalkSummary,
    chi_square_balance,
    coin_sign_sequence,
    coin_walk_simulate,
    empirical_frequencies,
    lag_autocorrelation,
    mertens_walk_stats,
    normal_cdf,
    runs_test,
    shift_term,
    sign_sequence_squarefree,
)

__all__ = [
    "CorruptCacheError",
    "FrequencyReport",
    "HarmonicMuSeries",
    "IntervalBracket",
    "MertensSeries",
    "MertensWalkStats",
    "MoebiusTable",
    "ProbabilityTriple",
    "ResourceLimitError",
    "TestReport",
    "WalkSummary",
    "bootstrap_identity",
    "chi_square_balance",
    "coin_sign_sequence",
    "coin_walk_simulate",
    "delta_divides",
    "delta_prob",
    "density_limits",
    "empirical_frequencies",
    "harmonic_series",
    "harmonic_series_many",
    "identity_terms",
    "interval_of",
    "lag_autocorrelation",
    "load_table",
    "mertens_series",
    "mertens_walk_stats",
    "moebius_at",
    "moebius_via_identity",
    "moebius_via_identity_coprime",
    "moebius_via_identity_odd",
    "normal_cdf",
    "prob_triple_even",
    "prob_triple_general",
    "prob_triple_odd",
    "runs_test",
    "save_table",
    "shift_term",
    "sieve_moebius",
    "sign_sequence_squarefree",
]
