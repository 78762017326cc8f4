"""Empirical side of the project: density scans against the asymptotic
limits, a seeded +/-1 coin-walk simulator with normal-approximation
checks, randomness tests on Moebius sign sequences, and Mertens-walk
scaling with the systematic shift series n * m^2 alongside.

Everything here is deterministic given its arguments: walks and
synthetic coins draw from counter-based per-trial streams (see
mobiuslab.rng), and range scans reduce integer counts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

import numpy as np

from mobiuslab import rng
from mobiuslab.probability import density_limits, harmonic_series, harmonic_series_many
from mobiuslab.sieve import MertensSeries, MoebiusTable

MIN_TEST_LENGTH = 100
CHECKPOINT_EXPONENT_STEP = Fraction(1, 8)  # checkpoints at 10^(k/8)

_POP16 = None


def _popcount16() -> np.ndarray:
    global _POP16
    if _POP16 is None:
        table = np.arange(1 << 16, dtype=np.uint16)
        counts = np.zeros(1 << 16, dtype=np.uint8)
        while table.any():
            counts += (table & 1).astype(np.uint8)
            table >>= 1
        _POP16 = counts
    return _POP16


@dataclass(frozen=True)
class FrequencyReport:
    lower: int
    upper: int
    parity: str  # all | odd | even
    count_minus: int
    count_plus: int
    count_zero: int
    freq_minus: float
    freq_plus: float
    freq_zero: float
    freq_squarefree: float
    limit_value: float  # asymptotic squarefree density for the parity class

    @property
    def total(self) -> int:
        return self.count_minus + self.count_plus + self.count_zero


@dataclass(frozen=True)
class WalkSummary:
    steps: int
    trials: int
    seed: int
    c: float
    epsilon: float
    fraction_within_c_sqrt: float
    fraction_within_power: float
    mean_terminal: float
    std_terminal: float


@dataclass(frozen=True)
class TestReport:
    test: str
    sequence: str
    statistic: float
    p_value: float
    z_score: float | None = None
    lag: int | None = None


@dataclass(frozen=True, eq=False)
class MertensWalkStats:
    limit: int
    checkpoints: np.ndarray  # ascending n values
    m_values: np.ndarray  # M(n) at checkpoints
    ratios: np.ndarray  # |M(n)| / sqrt(n)
    shift_terms: np.ndarray  # float(n * m_{isqrt(n)}^2)
    running_max: np.ndarray  # running max of |M| over the checkpoints
    alpha: float  # log-log slope of running_max vs n
    fit_residual: float  # rms residual of the fit


def _parity_slice(a: int, b: int, parity: str) -> tuple[int, int, int]:
    if parity == "all":
        return a, b, 1
    if parity == "odd":
        return (a if a % 2 else a + 1), b, 2
    if parity == "even":
        return (a if a % 2 == 0 else a + 1), b, 2
    raise ValueError(f"parity must be all, odd, or even, not {parity!r}")


def empirical_frequencies(
    a: int, b: int, parity: str, table: MoebiusTable
) -> FrequencyReport:
    """Exact outcome counts for mu over the integers of a parity class in [a, b)."""
    if not 1 <= a < b <= table.limit + 1:
        raise ValueError(f"need 1 <= a < b <= {table.limit + 1}, got [{a}, {b})")
    start, stop, step = _parity_slice(a, b, parity)
    sub = table.values[start:stop:step]
    if sub.size == 0:
        raise ValueError(f"range [{a}, {b}) holds no {parity} integers")
    minus = int(np.count_nonzero(sub == -1))
    plus = int(np.count_nonzero(sub == 1))
    zero = sub.size - minus - plus
    total = sub.size
    return FrequencyReport(
        lower=a,
        upper=b,
        parity=parity,
        count_minus=minus,
        count_plus=plus,
        count_zero=zero,
        freq_minus=minus / total,
        freq_plus=plus / total,
        freq_zero=zero / total,
        freq_squarefree=(minus + plus) / total,
        limit_value=density_limits()[parity].value,
    )


def sign_sequence_squarefree(
    a: int, b: int, parity: str, table: MoebiusTable
) -> np.ndarray:
    """mu over the squarefree integers of a parity class in [a, b), zeros dropped."""
    if not 1 <= a < b <= table.limit + 1:
        raise ValueError(f"need 1 <= a < b <= {table.limit + 1}, got [{a}, {b})")
    start, stop, step = _parity_slice(a, b, parity)
    sub = table.values[start:stop:step]
    return sub[sub != 0]


def coin_sign_sequence(
    length: int, seed: int, *, p_plus: float = 0.5, stream: int = 0
) -> np.ndarray:
    """Synthetic +/-1 coin sequence; +1 with probability p_plus."""
    if length < 1:
        raise ValueError("length must be >= 1")
    if not 0.0 < p_plus < 1.0:
        raise ValueError("p_plus must be in (0, 1)")
    u = rng.uniforms(seed, stream, length)
    return np.where(u < p_plus, 1, -1).astype(np.int8)


def coin_walk_terminals(steps: int, trials: int, seed: int) -> np.ndarray:
    """Terminal sums S of `trials` independent fair +/-1 walks of `steps` steps."""
    if steps < 1:
        raise ValueError("steps must be >= 1")
    if trials < 1:
        raise ValueError("trials must be >= 1")
    nwords = (steps + 63) // 64
    rem = steps % 64
    mask = np.uint64((1 << rem) - 1) if rem else np.uint64(0xFFFFFFFFFFFFFFFF)
    pop = _popcount16()
    out = np.empty(trials, dtype=np.int64)
    chunk = 4096
    for lo in range(0, trials, chunk):
        hi = min(lo + chunk, trials)
        block = rng.word_block(seed, np.arange(lo, hi, dtype=np.uint64), nwords)
        block[:, -1] &= mask
        ones = pop[block.view(np.uint16)].sum(axis=1, dtype=np.int64)
        out[lo:hi] = 2 * ones - steps
    return out


def coin_walk_simulate(
    steps: int, trials: int, seed: int, c: float, epsilon: float
) -> WalkSummary:
    """Simulate fair-coin walks and report the |S| concentration fractions.

    fraction_within_c_sqrt counts |S| <= c * sqrt(steps); the limit of
    that fraction is normal_cdf(c) - normal_cdf(-c). fraction_within_power
    counts |S| < steps^(1/2 + epsilon), whose limit is 1.
    """
    if c <= 0:
        raise ValueError("c must be > 0")
    if epsilon <= 0:
        raise ValueError("epsilon must be > 0")
    terminals = coin_walk_terminals(steps, trials, seed)
    absolutes = np.abs(terminals)
    within_c = float(np.mean(absolutes <= c * math.sqrt(steps)))
    within_power = float(np.mean(absolutes < steps ** (0.5 + epsilon)))
    return WalkSummary(
        steps=steps,
        trials=trials,
        seed=seed,
        c=c,
        epsilon=epsilon,
        fraction_within_c_sqrt=within_c,
        fraction_within_power=within_power,
        mean_terminal=float(np.mean(terminals)),
        std_terminal=float(np.std(terminals)),
    )


def normal_cdf(x: float) -> float:
    """Standard normal CDF via the complementary error function."""
    return 0.5 * math.erfc(-x / math.sqrt(2.0))


def shift_term(n: int, mu_prefix: MoebiusTable) -> Fraction:
    """Systematic Mertens drift estimate n * m_K^2 at K = floor(sqrt(n))."""
    if n < 1:
        raise ValueError("n must be >= 1")
    series = harmonic_series(isqrt(n), mu_prefix)
    return n * series.m**2


def walk_checkpoints(limit: int) -> list[int]:
    """Geometric grid floor(10^(k/8)) over [10^3, limit]."""
    points = []
    k = 24  # 10^(24/8) = 10^3
    while True:
        n = int(10 ** (k * float(CHECKPOINT_EXPONENT_STEP)))
        if n > limit:
            break
        if not points or n != points[-1]:
            points.append(n)
        k += 1
    return points


def mertens_walk_stats(
    limit: int, mertens: MertensSeries, mu_prefix: MoebiusTable
) -> MertensWalkStats:
    """Checkpointed |M| scaling plus the exact-rational shift series."""
    if limit < 1000:
        raise ValueError("limit must be >= 1000 to give enough checkpoints")
    if mertens.limit < limit:
        raise ValueError(f"Mertens series covers {mertens.limit}, need {limit}")
    points = walk_checkpoints(limit)
    cutoffs = sorted({isqrt(n) for n in points})
    if mu_prefix.limit < cutoffs[-1]:
        raise ValueError(
            f"prefix table covers {mu_prefix.limit}, shift terms need {cutoffs[-1]}"
        )
    bank = harmonic_series_many(cutoffs, mu_prefix)
    checkpoints = np.array(points, dtype=np.int64)
    m_values = mertens.prefix[checkpoints]
    ratios = np.abs(m_values) / np.sqrt(checkpoints.astype(np.float64))
    shifts = np.array(
        [float(n * bank[isqrt(n)].m ** 2) for n in points], dtype=np.float64
    )
    running_max = np.maximum.accumulate(np.abs(m_values))
    log_n = np.log(checkpoints.astype(np.float64))
    log_rm = np.log(np.maximum(running_max, 1).astype(np.float64))
    alpha, intercept = np.polyfit(log_n, log_rm, 1)
    residual = float(np.sqrt(np.mean((log_rm - (alpha * log_n + intercept)) ** 2)))
    return MertensWalkStats(
        limit=limit,
        checkpoints=checkpoints,
        m_values=m_values,
        ratios=ratios,
        shift_terms=shifts,
        running_max=running_max,
        alpha=float(alpha),
        fit_residual=residual,
    )


def _as_sign_array(seq) -> np.ndarray:
    arr = np.asarray(seq, dtype=np.int64)
    if arr.ndim != 1:
        raise ValueError("sequence must be one-dimensional")
    if arr.size and not np.all(np.abs(arr) == 1):
        raise ValueError("sequence entries must be +1 or -1")
    return arr


def _check_length(arr: np.ndarray, test: str) -> None:
    if arr.size < MIN_TEST_LENGTH:
        raise ValueError(
            f"{test} needs at least {MIN_TEST_LENGTH} entries, got {arr.size}"
        )


def chi_square_balance(seq, sequence: str = "sequence") -> TestReport:
    """Chi-square of the +/-1 counts against a fair 50/50 split (1 dof)."""
    arr = _as_sign_array(seq)
    _check_length(arr, "chi_square_balance")
    n = arr.size
    plus = int(np.count_nonzero(arr == 1))
    minus = n - plus
    statistic = (plus - minus) ** 2 / n
    p_value = math.erfc(math.sqrt(statistic / 2.0))
    return TestReport(
        test="chi_square_balance",
        sequence=sequence,
        statistic=float(statistic),
        p_value=p_value,
    )


def runs_test(seq, sequence: str = "sequence") -> TestReport:
    """Wald-Wolfowitz runs test on the signs, z-scored against the
    run-count mean and variance conditional on the observed counts."""
    arr = _as_sign_array(seq)
    _check_length(arr, "runs_test")
    n = arr.size
    plus = int(np.count_nonzero(arr == 1))
    minus = n - plus
    runs = 1 + int(np.count_nonzero(arr[1:] != arr[:-1]))
    if plus == 0 or minus == 0:
        return TestReport(
            test="runs_test",
            sequence=sequence,
            statistic=float(runs),
            p_value=0.0,
            z_score=float("-inf"),
        )
    mean = 1 + 2 * plus * minus / n
    var = 2 * plus * minus * (2 * plus * minus - n) / (n * n * (n - 1))
    z = (runs - mean) / math.sqrt(var)
    p_value = math.erfc(abs(z) / math.sqrt(2.0))
    return TestReport(
        test="runs_test",
        sequence=sequence,
        statistic=float(runs),
        p_value=p_value,
        z_score=z,
    )


def lag_autocorrelation(seq, lag: int, sequence: str = "sequence") -> TestReport:
    """Sample autocorrelation at the given lag, z-scored as sqrt(n) * r."""
    if lag < 1:
        raise ValueError("lag must be >= 1")
    arr = _as_sign_array(seq)
    _check_length(arr, "lag_autocorrelation")
    n = arr.size
    if lag >= n:
        raise ValueError(f"lag {lag} must be below the sequence length {n}")
    centered = arr.astype(np.float64) - arr.mean()
    denom = float(np.dot(centered, centered))
    if denom == 0.0:
        return TestReport(
            test="lag_autocorrelation",
            sequence=sequence,
            statistic=0.0,
            p_value=1.0,
            z_score=0.0,
            lag=lag,
        )
    r = float(np.dot(centered[:-lag], centered[lag:])) / denom
    z = r * math.sqrt(n)
    p_value = math.erfc(abs(z) / math.sqrt(2.0))
    return TestReport(
        test="lag_autocorrelation",
        sequence=sequence,
        statistic=r,
        p_value=p_value,
        z_score=z,
        lag=lag,
    )
