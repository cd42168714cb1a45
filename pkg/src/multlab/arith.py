"""Prime sieving, factorization, and p-adic valuation primitives."""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt


@dataclass(frozen=True)
class FactorizationSieve:
    """Smallest-prime-factor table for every n in 2..limit.

    spf[n] is the least prime dividing n; entries at 0 and 1 are unused.
    Immutable after construction, safe to share across threads.
    """

    limit: int
    spf: list[int]

    def primes(self) -> list[int]:
        return [n for n in range(2, self.limit + 1) if self.spf[n] == n]


def build_sieve(limit: int) -> FactorizationSieve:
    """Eratosthenes-style smallest-prime-factor sieve up to limit (>= 2)."""
    if limit < 2:
        raise ValueError(f"sieve limit must be >= 2, got {limit}")
    spf = list(range(limit + 1))
    for p in range(2, isqrt(limit) + 1):
        if spf[p] == p:
            for m in range(p * p, limit + 1, p):
                if spf[m] == m:
                    spf[m] = p
    return FactorizationSieve(limit, spf)


def factorize(n: int, sieve: FactorizationSieve) -> list[tuple[int, int]]:
    """(prime, exponent) pairs of n in increasing prime order; 1 -> []."""
    if n < 1:
        raise ValueError(f"cannot factorize {n}: need n >= 1")
    if n > sieve.limit:
        raise ValueError(f"{n} exceeds sieve limit {sieve.limit}")
    out = []
    spf = sieve.spf
    while n > 1:
        p = spf[n]
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        out.append((p, e))
    return out


def valuation(n: int, p: int) -> int:
    """Largest e with p**e dividing n; n may be arbitrarily large."""
    if n < 1:
        raise ValueError(f"valuation needs n >= 1, got {n}")
    if p < 2:
        raise ValueError(f"valuation needs a prime p >= 2, got {p}")
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def is_prime(n: int) -> bool:
    """Trial-division primality check (intended for small assignment keys)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True
