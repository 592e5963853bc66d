"""
Integer factorization: trial division, then Pollard's rho (Brent's variant)
"""

import logging
import random
from functools import lru_cache
from math import gcd, isqrt
from typing import Dict, List, Optional

from ..config import FactorBudget
from ..errors import PartialFactorizationError
from .factorization import Factorization
from .primality import is_prime
from .sieve import primes_up_to

logger = logging.getLogger("sondow.factorize")

DEFAULT_BUDGET = FactorBudget()


@lru_cache(maxsize=4)
def _prime_list(limit: int) -> tuple:
    return tuple(primes_up_to(limit).tolist())


def _brent_rho(n: int, c: int, y: int, max_iterations: int, batch: int = 128) -> Optional[int]:
    """One Pollard-Brent run with f(x) = x^2 + c; a proper factor or None"""
    g = r = q = 1
    x = ys = y
    iterations = 0
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            for _ in range(min(batch, r - k)):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            g = gcd(q, n)
            k += batch
        iterations += r
        r *= 2
        if g == 1 and iterations > max_iterations:
            return None

    if g == n:
        # The batched product overshot; step back one iteration at a time.
        while True:
            ys = (ys * ys + c) % n
            g = gcd(abs(x - ys), n)
            if g > 1:
                break
    return g if g != n else None


def pollard_brent(n: int, budget: FactorBudget = DEFAULT_BUDGET) -> Optional[int]:
    """A non-trivial factor of composite n, or None when the budget runs out"""
    if n % 2 == 0:
        return 2
    rng = random.Random(budget.seed ^ n)
    for attempt in range(budget.rho_restarts):
        c = rng.randrange(1, n - 1)
        y = rng.randrange(1, n - 1)
        d = _brent_rho(n, c, y, budget.rho_iterations)
        if d is not None:
            return d
        logger.debug(f"rho attempt {attempt + 1} failed on {n}, restarting")
    return None


def _trial_divide(n: int, limit: int, found: Dict[int, int]) -> int:
    """Strip primes ≤ limit from n into found; returns the cofactor"""
    if n == 1:
        return 1
    for p in _prime_list(limit):
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            found[p] = e
    # Every prime ≤ min(√n, limit) has been tried; if that covers √n, n is prime.
    if n > 1 and isqrt(n) <= limit:
        found[n] = found.get(n, 0) + 1
        return 1
    return n


def _split(n: int, budget: FactorBudget, found: Dict[int, int], stuck: List[int]):
    stack = [n]
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            found[m] = found.get(m, 0) + 1
            continue
        root = isqrt(m)
        if root * root == m:
            stack.extend((root, root))
            continue
        d = pollard_brent(m, budget)
        if d is None:
            stuck.append(m)
            continue
        stack.extend((d, m // d))


def factorize(n: int, budget: FactorBudget = DEFAULT_BUDGET) -> Factorization:
    """Complete canonical factorization of n ≥ 1.

    Raises PartialFactorizationError (with the primes found so far and the
    unfactored cofactor) when rho runs out of iterations.
    """
    if n < 1:
        raise ValueError(f"factorize needs n >= 1, got {n}")
    found: Dict[int, int] = {}
    cofactor = _trial_divide(n, budget.trial_limit, found)

    if cofactor > 1:
        stuck: List[int] = []
        _split(cofactor, budget, found, stuck)
        if stuck:
            remaining = 1
            for m in stuck:
                remaining *= m
            logger.warning(f"Factorization budget exceeded for {n}; cofactor has {len(str(remaining))} digits")
            raise PartialFactorizationError(n, sorted(found.items()), remaining)

    return Factorization(n, tuple(sorted(found.items())))

