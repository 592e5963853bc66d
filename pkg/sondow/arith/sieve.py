"""
Prime sieves

`primes_up_to` is a plain Eratosthenes sieve. `spf_sieve` builds a segment
[lo, hi] holding the smallest prime factor of every entry and, in the same
pass, Σ_{p|n} n/p, which the range scan tests.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from math import isqrt
from typing import List, Optional

import numpy as np

from ..config import DEFAULT_CONFIG, SIEVE_WORD_LIMIT
from ..errors import SegmentSizeError
from .factorization import Factorization

logger = logging.getLogger("sondow.sieve")


@lru_cache(maxsize=8)
def _primes_up_to_cached(limit: int) -> np.ndarray:
    is_prime = np.ones(limit + 1, dtype=bool)
    is_prime[:2] = False
    for p in range(2, isqrt(limit) + 1):
        if is_prime[p]:
            is_prime[p * p::p] = False
    primes = np.flatnonzero(is_prime).astype(np.int64)
    primes.setflags(write=False)
    return primes


def primes_up_to(limit: int) -> np.ndarray:
    """All primes ≤ limit, ascending (read-only array)"""
    if limit < 2:
        return np.array([], dtype=np.int64)
    return _primes_up_to_cached(int(limit))


@dataclass(frozen=True, eq=False)
class SpfSegment:
    lo: int
    hi: int
    spf: np.ndarray
    prime_part_sum: np.ndarray
    base_primes: np.ndarray

    def __len__(self) -> int:
        return self.hi - self.lo + 1

    def __contains__(self, n: int) -> bool:
        return self.lo <= n <= self.hi

    def values(self) -> np.ndarray:
        return np.arange(self.lo, self.hi + 1, dtype=np.int64)

    def smallest_prime_factor(self, n: int) -> int:
        if n not in self:
            raise IndexError(f"{n} outside segment [{self.lo}, {self.hi}]")
        return int(self.spf[n - self.lo])

    def is_prime(self, n: int) -> bool:
        return self.smallest_prime_factor(n) == n

    def factorize(self, n: int) -> Factorization:
        """Canonical factorization of n ∈ [lo, hi].

        The smallest prime comes from the table; the cofactor only has primes
        ≥ that one and is finished with the base primes (every composite
        cofactor has a factor ≤ √hi).
        """
        p = self.smallest_prime_factor(n)
        factors = []
        m = n
        e = 0
        while m % p == 0:
            m //= p
            e += 1
        factors.append((p, e))
        if m == 1:
            return Factorization(n, tuple(factors))

        start = int(np.searchsorted(self.base_primes, p, side="right"))
        for q in self.base_primes[start:].tolist():
            if q * q > m:
                break
            if m % q == 0:
                e = 0
                while m % q == 0:
                    m //= q
                    e += 1
                factors.append((q, e))
        if m > 1:
            factors.append((m, 1))
        return Factorization(n, tuple(factors))


def spf_sieve(lo: int, hi: int, max_segment_size: Optional[int] = None) -> SpfSegment:
    if lo < 2 or hi < lo:
        raise SegmentSizeError(f"segment needs 2 <= lo <= hi, got [{lo}, {hi}]")
    if hi >= SIEVE_WORD_LIMIT:
        raise SegmentSizeError(f"segment bound {hi} exceeds the sieve word limit 2^60")
    limit = max_segment_size if max_segment_size is not None else DEFAULT_CONFIG.max_segment_size
    size = hi - lo + 1
    if size > limit:
        raise SegmentSizeError(f"segment [{lo}, {hi}] has {size} entries, limit is {limit}")

    base_primes = primes_up_to(isqrt(hi))
    values = np.arange(lo, hi + 1, dtype=np.int64)
    spf = np.zeros(size, dtype=np.int64)
    remaining = values.copy()
    prime_part_sum = np.zeros(size, dtype=np.int64)

    for p in base_primes.tolist():
        first = -lo % p
        if first >= size:
            continue
        multiples = slice(first, None, p)
        unset = spf[multiples] == 0
        spf[multiples] = np.where(unset, p, spf[multiples])
        prime_part_sum[multiples] += values[multiples] // p

        pk = p
        while pk <= hi:
            offset = -lo % pk
            if offset >= size:
                break
            remaining[offset::pk] //= p
            pk *= p

    # Whatever is left is 1 or a single prime above √hi.
    large = remaining > 1
    prime_part_sum[large] += values[large] // remaining[large]
    unset = spf == 0
    spf[unset] = values[unset]

    logger.debug(f"Sieved segment [{lo}, {hi}] with {len(base_primes)} base primes")
    return SpfSegment(lo=lo, hi=hi, spf=spf, prime_part_sum=prime_part_sum, base_primes=base_primes)


def segment_bounds(lo: int, hi: int, segment_size: int) -> List[tuple]:
    """Split [lo, hi] into consecutive segments of at most segment_size entries"""
    bounds = []
    start = lo
    while start <= hi:
        end = min(start + segment_size - 1, hi)
        bounds.append((start, end))
        start = end + 1
    return bounds
