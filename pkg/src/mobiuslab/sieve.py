"""Moebius and Mertens tables over large ranges.

The sieve is segmented: each segment multiplies out the base primes
(p <= sqrt(limit)), zeroes multiples of p^2, and flips the sign of
entries that keep a leftover prime factor above the base-prime bound.
Output is exact and independent of the segment size.

Tables persist to a small versioned binary format (see save_table /
load_table); a corrupted or truncated file raises CorruptCacheError.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass
from math import isqrt
from pathlib import Path

import numpy as np

DEFAULT_SEGMENT_SIZE = 1 << 20
# Caps the output array plus per-segment scratch (int8 values, int64
# residual products, int64 index block: 17 bytes per segment slot).
DEFAULT_MEMORY_BUDGET = 2 << 30

CACHE_MAGIC = b"MOBS"
CACHE_VERSION = 1
_HEADER = struct.Struct("<4sIQ")


class CorruptCacheError(Exception):
    """A table cache file failed magic, version, or length validation."""


class ResourceLimitError(Exception):
    """A requested allocation exceeds the configured memory budget."""


@dataclass(frozen=True, eq=False)
class MoebiusTable:
    """mu(1..limit) as int8 values in {-1, 0, +1}; values[0] is unused.

    Immutable after construction and safe to share across readers.
    """

    limit: int
    values: np.ndarray

    def __post_init__(self):
        if self.limit < 1:
            raise ValueError("limit must be >= 1")
        if self.values.shape != (self.limit + 1,):
            raise ValueError("values must have length limit + 1")


@dataclass(frozen=True, eq=False)
class MertensSeries:
    """Prefix sums M(n) = sum of mu(k) for k <= n; prefix[0] = 0."""

    limit: int
    prefix: np.ndarray

    def m(self, n: int) -> int:
        if not 1 <= n <= self.limit:
            raise ValueError(f"n must be in [1, {self.limit}]")
        return int(self.prefix[n])


def _base_primes(bound: int) -> list[int]:
    """Primes up to bound via a plain boolean sieve."""
    if bound < 2:
        return []
    flags = np.ones(bound + 1, dtype=bool)
    flags[:2] = False
    for p in range(2, isqrt(bound) + 1):
        if flags[p]:
            flags[p * p :: p] = False
    return [int(p) for p in np.nonzero(flags)[0]]


def _fill_segment(values: np.ndarray, lo: int, hi: int, primes: list[int]) -> None:
    """Write mu(lo..hi-1) into values[lo:hi]."""
    length = hi - lo
    mu = np.ones(length, dtype=np.int8)
    residual = np.ones(length, dtype=np.int64)
    for p in primes:
        start = ((lo + p - 1) // p) * p
        if start < hi:
            sl = slice(start - lo, length, p)
            np.negative(mu[sl], out=mu[sl])
            residual[sl] *= p
        p2 = p * p
        start2 = ((lo + p2 - 1) // p2) * p2
        if start2 < hi:
            mu[start2 - lo : length : p2] = 0
    # Entries whose residual product falls short of n carry exactly one
    # prime factor above the base-prime bound: one more sign flip.
    leftover = residual != np.arange(lo, hi, dtype=np.int64)
    leftover &= mu != 0
    mu[leftover] = -mu[leftover]
    values[lo:hi] = mu


def sieve_moebius(
    limit: int,
    *,
    segment_size: int = DEFAULT_SEGMENT_SIZE,
    memory_budget_bytes: int = DEFAULT_MEMORY_BUDGET,
) -> MoebiusTable:
    """Exact mu(1..limit) by segmented sieving.

    Deterministic and independent of segment_size. Raises
    ResourceLimitError when the table plus segment scratch would exceed
    memory_budget_bytes.
    """
    if limit < 1:
        raise ValueError("limit must be >= 1")
    if segment_size < 1:
        raise ValueError("segment_size must be >= 1")
    seg = min(segment_size, limit)
    needed = (limit + 1) + 17 * seg
    if needed > memory_budget_bytes:
        raise ResourceLimitError(
            f"sieve of limit {limit} needs ~{needed} bytes, over the "
            f"memory budget of {memory_budget_bytes} bytes"
        )
    values = np.zeros(limit + 1, dtype=np.int8)
    primes = _base_primes(isqrt(limit))
    for lo in range(1, limit + 1, seg):
        _fill_segment(values, lo, min(lo + seg, limit + 1), primes)
    values.setflags(write=False)
    return MoebiusTable(limit=limit, values=values)


def moebius_at(n: int) -> int:
    """mu(n) by trial division; independent of the sieve code path.

    Early-exits to 0 on a repeated prime factor. Practical for
    n up to ~10^12.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return 1
    m = n
    factors = 0
    if m % 2 == 0:
        m //= 2
        if m % 2 == 0:
            return 0
        factors += 1
    d = 3
    while d * d <= m:
        if m % d == 0:
            m //= d
            if m % d == 0:
                return 0
            factors += 1
        d += 2
    if m > 1:
        factors += 1
    return -1 if factors % 2 else 1


def mertens_series(table: MoebiusTable) -> MertensSeries:
    """Prefix sums of the table; M(n) - M(n-1) = mu(n).

    int32 is ample: |M(n)| stays in the tens of thousands across the
    supported range (it is ~1.9e3 at n = 10^8).
    """
    prefix = np.zeros(table.limit + 1, dtype=np.int32)
    np.cumsum(table.values[1:], dtype=np.int32, out=prefix[1:])
    prefix.setflags(write=False)
    return MertensSeries(limit=table.limit, prefix=prefix)


def save_table(table: MoebiusTable, path: str | Path) -> None:
    """Write the binary cache: magic, u32 version, u64 limit, int8 payload."""
    path = Path(path)
    with open(path, "wb") as fh:
        fh.write(_HEADER.pack(CACHE_MAGIC, CACHE_VERSION, table.limit))
        fh.write(table.values[1:].tobytes())


def load_table(path: str | Path) -> MoebiusTable:
    """Read a cache file back; any format deviation raises CorruptCacheError."""
    path = Path(path)
    with open(path, "rb") as fh:
        header = fh.read(_HEADER.size)
        if len(header) < _HEADER.size:
            raise CorruptCacheError(f"{path}: truncated header")
        magic, version, limit = _HEADER.unpack(header)
        if magic != CACHE_MAGIC:
            raise CorruptCacheError(f"{path}: bad magic {magic!r}")
        if version != CACHE_VERSION:
            raise CorruptCacheError(f"{path}: unsupported version {version}")
        if limit < 1:
            raise CorruptCacheError(f"{path}: invalid limit {limit}")
        payload = fh.read()
    if len(payload) != limit:
        raise CorruptCacheError(
            f"{path}: payload holds {len(payload)} values, header declares {limit}"
        )
    values = np.zeros(limit + 1, dtype=np.int8)
    values[1:] = np.frombuffer(payload, dtype=np.int8)
    if np.abs(values).max(initial=0) > 1:
        raise CorruptCacheError(f"{path}: payload values outside {{-1, 0, 1}}")
    values.setflags(write=False)
    return MoebiusTable(limit=limit, values=values)
