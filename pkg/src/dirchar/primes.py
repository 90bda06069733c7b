"""Prime tables, counts in arithmetic progressions, and effective search.

The sieve is a classical Eratosthenes over a packed bit-set; above the
segment threshold composites are marked one block at a time so working
memory stays at one block plus the bit-set (about N/8 bytes).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

SEGMENT = 10**7
SEARCH_CAP = 10**9


class ResourceLimitError(RuntimeError):
    """A search exceeded the hard desk-scale cap."""


class PrimeTable:
    """Exact primality for 2..limit, bit-packed, immutable."""

    def __init__(self, limit: int, segment: int = SEGMENT):
        if limit < 2:
            raise ValueError("sieve limit must be >= 2")
        self.limit = limit
        # byte-aligned segments keep the packed writes exact
        self._bits = _sieve_bits(limit, max(8, segment // 8 * 8))
        self._primes: np.ndarray | None = None

    def is_prime(self, n: int) -> bool:
        if n < 2 or n > self.limit:
            return False
        return bool(self._bits[n >> 3] >> (n & 7) & 1)

    def primes(self) -> np.ndarray:
        """All primes <= limit as an int64 array (cached)."""
        if self._primes is None:
            chunks = []
            step = SEGMENT
            for lo in range(0, self.limit + 1, step):
                hi = min(lo + step, self.limit + 1)
                flags = np.unpackbits(self._bits[lo >> 3: (hi + 7) >> 3],
                                      bitorder="little", count=hi - lo + (lo & 7))
                chunks.append(np.flatnonzero(flags[lo & 7:]) + lo)
            self._primes = np.concatenate(chunks).astype(np.int64)
        return self._primes

    def count(self, x: int | None = None) -> int:
        pr = self.primes()
        if x is None or x >= self.limit:
            return len(pr)
        return int(np.searchsorted(pr, x, side="right"))


def _sieve_bits(limit: int, segment: int) -> np.ndarray:
    if limit <= segment:
        flags = np.ones(limit + 1, dtype=bool)
        flags[:2] = False
        for p in range(2, math.isqrt(limit) + 1):
            if flags[p]:
                flags[p * p:: p] = False
        return np.packbits(flags, bitorder="little")

    base = PrimeTable(math.isqrt(limit), segment=segment).primes()
    bits = np.zeros((limit + 8) // 8, dtype=np.uint8)
    for lo in range(0, limit + 1, segment):
        hi = min(lo + segment, limit + 1)
        flags = np.ones(hi - lo, dtype=bool)
        if lo == 0:
            flags[:2] = False
        for p in base:
            p = int(p)
            start = max(p * p, (lo + p - 1) // p * p)
            if start < hi:
                flags[start - lo:: p] = False
        # segments are multiples of 8 except possibly the last
        packed = np.packbits(flags, bitorder="little")
        bits[lo >> 3: (lo >> 3) + len(packed)] = packed
    return bits


def sieve(n: int, segment: int = SEGMENT) -> PrimeTable:
    """PrimeTable with exact primality for all integers up to n."""
    return PrimeTable(n, segment=segment)


def count_in_progression(x: int, k: int, m: int, table: PrimeTable | None = None) -> int:
    """Number of primes q <= x with q = m mod k."""
    if x < 2 or k < 1:
        raise ValueError("need x >= 2 and k >= 1")
    if table is None or table.limit < x:
        table = sieve(x)
    pr = table.primes()
    pr = pr[pr <= x]
    return int(np.count_nonzero(pr % k == m % k))


@dataclass(frozen=True)
class SearchResult:
    """Smallest prime above the threshold in the residue class, plus the
    interval length that was actually needed to reach it."""

    prime: int
    interval: int


def kronecker_search(mu: int, k: int, m: int) -> SearchResult:
    """Smallest prime > mu congruent to m mod k (m coprime to k)."""
    if k < 1 or math.gcd(m % k if k > 1 else 0, k) != 1:
        raise ValueError("m must be coprime to k")
    bound = mu + max(64 * k, 10**4)
    while True:
        if bound > SEARCH_CAP:
            raise ResourceLimitError(f"no prime found below cap {SEARCH_CAP}")
        table = sieve(bound)
        pr = table.primes()
        hits = pr[(pr > mu) & (pr % k == m % k)]
        if len(hits):
            p = int(hits[0])
            return SearchResult(p, p - mu)
        bound *= 2


def pnt_ap_ratio(x: int, k: int, m: int, table: PrimeTable | None = None) -> float:
    """count(x; k, m) * phi(k) * ln(x) / x, the density ratio against 1."""
    if x < 100:
        raise ValueError("need x >= 100")
    if math.gcd(m % k if k > 1 else 0, k) != 1:
        raise ValueError("m must be coprime to k")
    from .arith import euler_phi

    count = count_in_progression(x, k, m, table=table)
    return count * euler_phi(k) * math.log(x) / x
