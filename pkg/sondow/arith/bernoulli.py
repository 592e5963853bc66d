"""
Exact Bernoulli numbers

B_k from the recurrence Σ_{j=0}^{m} C(m+1, j)·B_j = 0 (B_1 = −1/2), skipping
the odd indices ≥ 3 where B_k = 0. Values are cached and extended on demand.
"""

import threading
from fractions import Fraction
from math import comb, prod
from typing import List

from ..config import DEFAULT_BERNOULLI_MAX_K
from ..errors import InvalidExponentError, OutOfRangeError
from .sieve import primes_up_to

_lock = threading.Lock()
_even: List[Fraction] = [Fraction(1)]  # _even[j] == B_{2j}


def _extend_to(k: int) -> None:
    with _lock:
        while 2 * (len(_even) - 1) < k:
            m = 2 * len(_even)
            # C(m+1, 1)·B_1 = −(m+1)/2
            total = Fraction(-(m + 1), 2)
            for j, b in enumerate(_even):
                total += comb(m + 1, 2 * j) * b
            _even.append(-total / (m + 1))


def bernoulli_number(k: int, max_k: int = DEFAULT_BERNOULLI_MAX_K) -> Fraction:
    if k < 0:
        raise InvalidExponentError(f"Bernoulli index must be >= 0, got {k}")
    if k > max_k:
        raise OutOfRangeError(f"Bernoulli index {k} exceeds the configured maximum {max_k}")
    if k == 1:
        return Fraction(-1, 2)
    if k % 2 == 1:
        raise InvalidExponentError(f"Bernoulli index must be even (or 0, 1), got {k}")
    _extend_to(k)
    return _even[k // 2]


def von_staudt_clausen_denominator(k: int) -> int:
    """∏ p over primes with (p − 1) | k, the denominator of B_k for even k ≥ 2"""
    if k < 2 or k % 2:
        raise InvalidExponentError(f"von Staudt-Clausen needs an even k >= 2, got {k}")
    return prod(p for p in primes_up_to(k + 1).tolist() if k % (p - 1) == 0)
