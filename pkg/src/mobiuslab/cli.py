"""Command-line surface.

Subcommands: sieve, verify-identity, probs, density, walk, cointoss,
mustats. Tables are cached as versioned binary files under --cache-dir
(default ./cache, overridable via the MOBIUSLAB_CACHE_DIR environment
variable); commands sieve on cache miss with a note to stderr.

Exit codes: 0 success, 1 verification failure, 2 usage or parameter
error, 3 corrupt cache file.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from pathlib import Path

from mobiuslab.identity import moebius_via_identity, moebius_via_identity_odd
from mobiuslab.probability import (
    delta_prob,
    interval_of,
    prob_triple_even,
    prob_triple_general,
    prob_triple_odd,
)
from mobiuslab.sieve import (
    CorruptCacheError,
    MoebiusTable,
    ResourceLimitError,
    load_table,
    mertens_series,
    save_table,
    sieve_moebius,
)
from mobiuslab.stochastic import (
    MIN_TEST_LENGTH,
    chi_square_balance,
    coin_sign_sequence,
    coin_walk_simulate,
    empirical_frequencies,
    lag_autocorrelation,
    mertens_walk_stats,
    normal_cdf,
    runs_test,
    sign_sequence_squarefree,
)

CACHE_ENV_VAR = "MOBIUSLAB_CACHE_DIR"
DENSITY_CSV_HEADER = ["n", "freq_minus", "freq_plus", "freq_zero", "freq_squarefree", "limit"]
WALK_CSV_HEADER = ["n", "M", "sqrt_n", "ratio", "shift_term"]


@dataclass
class RunConfig:
    command: str
    limit: int | None = None
    n: int | None = None
    range_: tuple[int, int] | None = None
    parity: str = "all"
    fmt: str = "csv"
    out: str | None = None
    cache_dir: Path = Path("cache")
    odd_only: bool = False
    window: int | None = None
    steps: int | None = None
    trials: int | None = None
    seed: int = 0
    c: float = 1.96
    epsilon: float = 0.1
    lag: int = 1
    synthetic: bool = False
    bias: float = 0.5


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _range_pair(text: str) -> tuple[int, int]:
    try:
        a_text, b_text = text.split(":", 1)
        a, b = int(a_text), int(b_text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A:B, got {text!r}")
    if a < 1 or b <= a:
        raise argparse.ArgumentTypeError(f"need 1 <= A < B, got {text!r}")
    return a, b


def resolve_cache_dir(flag_value: str | None) -> Path:
    if flag_value:
        return Path(flag_value)
    env = os.environ.get(CACHE_ENV_VAR)
    return Path(env) if env else Path("cache")


def ensure_table(limit: int, cache_dir: Path) -> MoebiusTable:
    """Load the smallest adequate cached table, sieving on a miss."""
    best: tuple[int, Path] | None = None
    if cache_dir.is_dir():
        for path in cache_dir.glob("moebius_*.mobs"):
            try:
                cached_limit = int(path.stem.split("_", 1)[1])
            except (IndexError, ValueError):
                continue
            if cached_limit >= limit and (best is None or cached_limit < best[0]):
                best = (cached_limit, path)
    if best is not None:
        table = load_table(best[1])
        if table.limit >= limit:
            return table
    print(f"sieving mu up to {limit} (no cached table found)", file=sys.stderr)
    table = sieve_moebius(limit)
    cache_dir.mkdir(parents=True, exist_ok=True)
    save_table(table, cache_dir / f"moebius_{limit}.mobs")
    return table


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _fmt_float(x: float) -> str:
    return f"{x:.12g}"


def _fraction_json(f: Fraction) -> dict:
    return {"num": str(f.numerator), "den": str(f.denominator), "decimal": float(f)}


def cmd_sieve(cfg: RunConfig) -> int:
    table = sieve_moebius(cfg.limit)
    cfg.cache_dir.mkdir(parents=True, exist_ok=True)
    path = cfg.cache_dir / f"moebius_{cfg.limit}.mobs"
    save_table(table, path)
    squarefree = int((table.values[1:] != 0).sum())
    m_limit = int(table.values[1:].sum(dtype="int64"))
    print(f"limit={cfg.limit} squarefree={squarefree} M({cfg.limit})={m_limit} cache={path}")
    return 0


def cmd_verify_identity(cfg: RunConfig) -> int:
    if cfg.limit < 2:
        raise ValueError("--max must be >= 2")
    table = ensure_table(cfg.limit, cfg.cache_dir)
    start = 3 if cfg.odd_only else 2
    step = 2 if cfg.odd_only else 1
    evaluate = moebius_via_identity_odd if cfg.odd_only else moebius_via_identity
    for n in range(start, cfg.limit + 1, step):
        got = evaluate(n, table)
        expected = int(table.values[n])
        if got != expected:
            print(f"mismatch at n={n}: identity gives {got}, sieve gives {expected}")
            return 1
    checked = "odd n" if cfg.odd_only else "n"
    print(f"identity matches the sieve for all {checked} in [2, {cfg.limit}]")
    return 0


def cmd_probs(cfg: RunConfig) -> int:
    n = cfg.n
    table = ensure_table(max(isqrt(n) + 10, 100), cfg.cache_dir)
    if cfg.parity == "all":
        triple = prob_triple_general(n, table)
        parity_class = "general"
    elif cfg.parity == "odd":
        triple = prob_triple_odd(n, table)
        parity_class = "odd"
    else:
        triple = prob_triple_even(n, table)
        parity_class = "even"
    bracket = interval_of(n, table)
    gap = delta_prob(n, parity_class, table)
    payload = {
        "n": n,
        "parity": parity_class,
        "interval": {"lower": bracket.lower, "upper": bracket.upper},
        "p_minus": _fraction_json(triple.p_minus),
        "p_plus": _fraction_json(triple.p_plus),
        "p_zero": _fraction_json(triple.p_zero),
        "gap": _fraction_json(gap),
    }
    _emit(json.dumps(payload, indent=2) + "\n", cfg.out)
    return 0


def _density_checkpoints(limit: int) -> list[int]:
    points = []
    k = 8  # 10^(8/8) = 10
    while True:
        n = int(10 ** (k / 8))
        if n >= limit:
            break
        if not points or n != points[-1]:
            points.append(n)
        k += 1
    points.append(limit)
    return points


def cmd_density(cfg: RunConfig) -> int:
    table = ensure_table(cfg.limit, cfg.cache_dir)
    if cfg.window:
        edges = list(range(1, cfg.limit + 1, cfg.window))
        spans = [(a, min(a + cfg.window, cfg.limit + 1)) for a in edges]
    else:
        spans = [(1, n + 1) for n in _density_checkpoints(cfg.limit)]
    rows = []
    for a, b in spans:
        if cfg.parity != "all" and not any(n % 2 == (cfg.parity == "odd") for n in range(a, b)):
            continue  # window holds no integers of this parity
        report = empirical_frequencies(a, b, cfg.parity, table)
        rows.append(
            {
                "n": b - 1,
                "freq_minus": report.freq_minus,
                "freq_plus": report.freq_plus,
                "freq_zero": report.freq_zero,
                "freq_squarefree": report.freq_squarefree,
                "limit": report.limit_value,
            }
        )
    if cfg.fmt == "json":
        _emit(json.dumps(rows, indent=2) + "\n", cfg.out)
        return 0
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(DENSITY_CSV_HEADER)
    for row in rows:
        writer.writerow(
            [row["n"]] + [_fmt_float(row[key]) for key in DENSITY_CSV_HEADER[1:]]
        )
    _emit(buffer.getvalue(), cfg.out)
    return 0


def cmd_walk(cfg: RunConfig) -> int:
    if cfg.limit < 1000:
        raise ValueError("--max must be >= 1000 to give enough checkpoints")
    table = ensure_table(cfg.limit, cfg.cache_dir)
    stats = mertens_walk_stats(cfg.limit, mertens_series(table), table)
    rows = [
        {
            "n": int(n),
            "M": int(m),
            "sqrt_n": float(n) ** 0.5,
            "ratio": float(ratio),
            "shift_term": float(shift),
        }
        for n, m, ratio, shift in zip(
            stats.checkpoints, stats.m_values, stats.ratios, stats.shift_terms
        )
    ]
    if cfg.fmt == "json":
        payload = {"rows": rows, "alpha": stats.alpha, "residual": stats.fit_residual}
        _emit(json.dumps(payload, indent=2) + "\n", cfg.out)
        return 0
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(WALK_CSV_HEADER)
    for row in rows:
        writer.writerow(
            [row["n"], row["M"]]
            + [_fmt_float(row[key]) for key in ("sqrt_n", "ratio", "shift_term")]
        )
    buffer.write(
        f"# alpha={_fmt_float(stats.alpha)} residual={_fmt_float(stats.fit_residual)}\n"
    )
    _emit(buffer.getvalue(), cfg.out)
    return 0


def cmd_cointoss(cfg: RunConfig) -> int:
    summary = coin_walk_simulate(cfg.steps, cfg.trials, cfg.seed, cfg.c, cfg.epsilon)
    payload = {
        "steps": summary.steps,
        "trials": summary.trials,
        "seed": summary.seed,
        "c": summary.c,
        "epsilon": summary.epsilon,
        "fraction_within_c_sqrt": summary.fraction_within_c_sqrt,
        "fraction_within_power": summary.fraction_within_power,
        "theoretical_within_c": normal_cdf(cfg.c) - normal_cdf(-cfg.c),
        "mean_terminal": summary.mean_terminal,
        "std_terminal": summary.std_terminal,
    }
    _emit(json.dumps(payload, indent=2) + "\n", cfg.out)
    return 0


def cmd_mustats(cfg: RunConfig) -> int:
    a, b = cfg.range_
    if cfg.synthetic:
        seq = coin_sign_sequence(b - a, cfg.seed, p_plus=cfg.bias)
        descriptor = f"coin(p={cfg.bias}, seed={cfg.seed}, n={b - a})"
    else:
        table = ensure_table(b - 1, cfg.cache_dir)
        seq = sign_sequence_squarefree(a, b, cfg.parity, table)
        descriptor = f"mu-signs[{a}:{b}) parity={cfg.parity}"
    if seq.size < MIN_TEST_LENGTH:
        raise ValueError(
            f"sequence of length {seq.size} is below the test minimum {MIN_TEST_LENGTH}"
        )
    reports = [chi_square_balance(seq, descriptor), runs_test(seq, descriptor)]
    reports += [
        lag_autocorrelation(seq, k, descriptor) for k in range(1, cfg.lag + 1)
    ]
    payload = [
        {
            "test": r.test,
            "sequence": r.sequence,
            "statistic": r.statistic,
            "p_value": r.p_value,
            "z_score": r.z_score,
            "lag": r.lag,
        }
        for r in reports
    ]
    _emit(json.dumps(payload, indent=2) + "\n", cfg.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mobiuslab",
        description="Moebius/Mertens tables, identity verification, exact value "
        "probabilities, density scans, and coin-model experiments",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_cache(p):
        p.add_argument("--cache-dir", help=f"table cache directory (default ./cache, or ${CACHE_ENV_VAR})")

    def add_out(p):
        p.add_argument("--out", help="write output to this path instead of stdout")

    p = sub.add_parser("sieve", help="sieve mu up to a limit and cache the table")
    p.add_argument("--limit", type=_positive_int, required=True)
    add_cache(p)
    p.set_defaults(func=cmd_sieve)

    p = sub.add_parser("verify-identity", help="check the delta-sum identity against the sieve")
    p.add_argument("--max", type=_positive_int, required=True, dest="limit")
    p.add_argument("--odd-only", action="store_true", help="check the odd-restricted form on odd n")
    add_cache(p)
    p.set_defaults(func=cmd_verify_identity)

    p = sub.add_parser("probs", help="exact value probabilities at n")
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--parity", choices=["all", "odd", "even"], default="all")
    add_cache(p)
    add_out(p)
    p.set_defaults(func=cmd_probs)

    p = sub.add_parser("density", help="empirical outcome frequencies against the density limits")
    p.add_argument("--max", type=_positive_int, required=True, dest="limit")
    p.add_argument("--parity", choices=["all", "odd", "even"], default="all")
    p.add_argument("--window", type=_positive_int, help="emit per-window rows instead of cumulative ones")
    p.add_argument("--format", choices=["csv", "json"], default="csv", dest="fmt")
    add_cache(p)
    add_out(p)
    p.set_defaults(func=cmd_density)

    p = sub.add_parser("walk", help="Mertens walk checkpoints with the shift-term series")
    p.add_argument("--max", type=_positive_int, required=True, dest="limit")
    p.add_argument("--format", choices=["csv", "json"], default="csv", dest="fmt")
    add_cache(p)
    add_out(p)
    p.set_defaults(func=cmd_walk)

    p = sub.add_parser("cointoss", help="simulate fair +/-1 walks and report |S| concentration")
    p.add_argument("--steps", type=_positive_int, required=True)
    p.add_argument("--trials", type=_positive_int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--c", type=float, default=1.96)
    p.add_argument("--epsilon", type=float, default=0.1)
    add_out(p)
    p.set_defaults(func=cmd_cointoss)

    p = sub.add_parser("mustats", help="randomness tests over a squarefree sign sequence")
    p.add_argument("--range", type=_range_pair, required=True, dest="range_", metavar="A:B")
    p.add_argument("--parity", choices=["all", "odd", "even"], default="all")
    p.add_argument("--lag", type=_positive_int, default=1, help="report autocorrelation at lags 1..LAG")
    p.add_argument("--synthetic", action="store_true", help="test a seeded synthetic coin instead of mu signs")
    p.add_argument("--bias", type=float, default=0.5, help="P(+1) for the synthetic coin")
    p.add_argument("--seed", type=int, default=0)
    add_cache(p)
    add_out(p)
    p.set_defaults(func=cmd_mustats)

    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(command=args.command)
    for field in (
        "limit", "n", "range_", "parity", "fmt", "out", "odd_only", "window",
        "steps", "trials", "seed", "c", "epsilon", "lag", "synthetic", "bias",
    ):
        if hasattr(args, field):
            setattr(cfg, field, getattr(args, field))
    cfg.cache_dir = resolve_cache_dir(getattr(args, "cache_dir", None))
    return cfg


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = config_from_args(args)
    try:
        return args.func(cfg)
    except CorruptCacheError as exc:
        print(f"corrupt cache: {exc}", file=sys.stderr)
        return 3
    except (ValueError, ResourceLimitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
