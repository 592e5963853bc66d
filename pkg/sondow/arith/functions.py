"""
Arithmetic functions on integers and factorizations
"""

import math
from fractions import Fraction
from math import prod

from ..errors import InvalidExponentError, InvalidModulusError
from .factorization import Factorization

ExactRational = Fraction


def gcd(a: int, b: int) -> int:
    """Greatest common divisor, gcd(0, 0) = 0"""
    return math.gcd(a, b)


def lcm(a: int, b: int) -> int:
    return math.lcm(a, b)


def mod_pow(base: int, exp: int, m: int) -> int:
    """base^exp mod m in [0, m)"""
    if m < 1:
        raise InvalidModulusError(f"modulus must be >= 1, got {m}")
    if exp < 0:
        raise InvalidExponentError(f"exponent must be >= 0, got {exp}")
    # Built-in pow is square-and-multiply on arbitrary-precision ints.
    return pow(base, exp, m)


def radical(f: Factorization) -> int:
    return prod(f.primes)


def is_squarefree(f: Factorization) -> bool:
    return all(e == 1 for _, e in f.factors)


def euler_phi(f: Factorization) -> int:
    return prod(p ** (e - 1) * (p - 1) for p, e in f.factors)


def _lambda_prime_power(p: int, e: int) -> int:
    if p == 2:
        if e == 1:
            return 1
        if e == 2:
            return 2
        return 1 << (e - 2)
    return p ** (e - 1) * (p - 1)


def carmichael_lambda(f: Factorization) -> int:
    """Exponent of the unit group (Z/nZ)*"""
    result = 1
    for p, e in f.factors:
        result = math.lcm(result, _lambda_prime_power(p, e))
    return result


def arithmetic_derivative(f: Factorization) -> int:
    """n' = n·Σ e/p, exact in integers"""
    n = f.value
    return sum(e * (n // p) for p, e in f.factors)


def rational_congruent(r1: Fraction, r2: Fraction, n: int) -> bool:
    """r1 ≡ r2 (mod n): n divides the numerator of r1 − r2 in lowest terms"""
    if n < 1:
        raise InvalidModulusError(f"modulus must be >= 1, got {n}")
    return (Fraction(r1) - Fraction(r2)).numerator % n == 0
