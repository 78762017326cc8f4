"""Delta-sum evaluation of the Moebius function.

mu(n) for n >= 2 equals minus the sum of mu(i)*mu(j) over all pairs
i, j <= floor(sqrt(n)) whose product divides n. Only divisors of n can
fire the divisibility indicator, so the evaluators enumerate divisors
of n up to the cutoff instead of walking the full pair grid; the
semantics are unchanged.

The same sum restricted to odd indices reproduces mu on odd n, and more
generally restricting indices to those coprime to any prime set that n
avoids leaves the value intact. bootstrap_identity rebuilds the whole
table from the identity alone, seeded only with mu(1) = 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import Sequence

import numpy as np

from mobiuslab.sieve import MoebiusTable


def delta_divides(n: int, d: int) -> int:
    """1 when d divides n, else 0."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if d < 1:
        raise ValueError("d must be >= 1")
    return 1 if n % d == 0 else 0


@dataclass(frozen=True)
class IdentityTerm:
    i: int
    j: int
    coefficient: int  # mu(i) * mu(j), nonzero
    fired: bool  # i*j divides n


@dataclass(frozen=True)
class IdentityTermSet:
    """All nonzero-coefficient terms of the delta sum at n."""

    n: int
    cutoff: int
    terms: tuple[IdentityTerm, ...]

    def value(self) -> int:
        return -sum(t.coefficient for t in self.terms if t.fired)


def _require_prefix(n: int, mu_prefix: MoebiusTable) -> int:
    cutoff = isqrt(n)
    if mu_prefix.limit < cutoff:
        raise ValueError(
            f"prefix table covers {mu_prefix.limit} but n={n} needs mu up to {cutoff}"
        )
    return cutoff


def identity_terms(n: int, mu_prefix: MoebiusTable) -> IdentityTermSet:
    """Materialize the full pair grid (test-scale; O(cutoff^2) terms)."""
    if n < 2:
        raise ValueError("n must be >= 2")
    cutoff = _require_prefix(n, mu_prefix)
    mu = mu_prefix.values
    nonzero = [(i, int(mu[i])) for i in range(1, cutoff + 1) if mu[i] != 0]
    terms = tuple(
        IdentityTerm(i=i, j=j, coefficient=mi * mj, fired=n % (i * j) == 0)
        for i, mi in nonzero
        for j, mj in nonzero
    )
    return IdentityTermSet(n=n, cutoff=cutoff, terms=terms)


def _divisor_items(n: int, cutoff: int, values) -> list[tuple[int, int]]:
    """Squarefree divisors of n up to cutoff, paired with their mu value."""
    items = []
    for d in range(1, cutoff + 1):
        if n % d == 0:
            m = int(values[d])
            if m != 0:
                items.append((d, m))
    return items


def _identity_sum(n: int, items: Sequence[tuple[int, int]]) -> int:
    total = 0
    for i, mi in items:
        q = n // i
        inner = 0
        for j, mj in items:
            if q % j == 0:
                inner += mj
        total += mi * inner
    return -total


def moebius_via_identity(n: int, mu_prefix: MoebiusTable) -> int:
    """Evaluate the delta sum at n; equals mu(n)."""
    if n < 2:
        raise ValueError("n must be >= 2")
    cutoff = _require_prefix(n, mu_prefix)
    items = _divisor_items(n, cutoff, mu_prefix.values)
    return _identity_sum(n, items)


def moebius_via_identity_odd(n: int, mu_prefix: MoebiusTable) -> int:
    """Odd-restricted delta sum; defined for odd n >= 3 and equals mu(n)."""
    if n < 3 or n % 2 == 0:
        raise ValueError("n must be odd and >= 3")
    cutoff = _require_prefix(n, mu_prefix)
    items = [(d, m) for d, m in _divisor_items(n, cutoff, mu_prefix.values) if d % 2]
    return _identity_sum(n, items)


def moebius_via_identity_coprime(
    n: int, excluded_primes: set[int], mu_prefix: MoebiusTable
) -> int:
    """Delta sum over indices coprime to every excluded prime.

    n itself must avoid the excluded primes; divisors of n then survive
    the restriction automatically, so the value is still mu(n). With all
    primes below a prime n excluded, only the (1, 1) term remains.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    for p in excluded_primes:
        if n % p == 0:
            raise ValueError(f"n={n} shares factor {p} with the excluded set")
    cutoff = _require_prefix(n, mu_prefix)
    items = [
        (d, m)
        for d, m in _divisor_items(n, cutoff, mu_prefix.values)
        if all(d % p for p in excluded_primes)
    ]
    return _identity_sum(n, items)


def bootstrap_identity(limit: int) -> MoebiusTable:
    """Rebuild mu(1..limit) from the identity alone.

    Each mu(n) needs mu only up to sqrt(n) < n, so filling in increasing
    order is self-sufficient once mu(1) = 1 is seeded.
    """
    if limit < 2:
        raise ValueError("limit must be >= 2")
    values = [0] * (limit + 1)
    values[1] = 1
    for n in range(2, limit + 1):
        items = _divisor_items(n, isqrt(n), values)
        values[n] = _identity_sum(n, items)
    arr = np.array(values, dtype=np.int8)
    arr.setflags(write=False)
    return MoebiusTable(limit=limit, values=arr)
