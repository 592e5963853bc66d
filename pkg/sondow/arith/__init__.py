"""
Core arithmetic: factorizations, primality, sieves, arithmetic functions
"""

from .bernoulli import bernoulli_number, von_staudt_clausen_denominator
from .factorization import Factorization
from .factorize import factorize, pollard_brent
from .functions import (
    ExactRational,
    arithmetic_derivative,
    carmichael_lambda,
    euler_phi,
    gcd,
    is_squarefree,
    lcm,
    mod_pow,
    radical,
    rational_congruent,
)
from .primality import is_prime, jacobi
from .sieve import SpfSegment, primes_up_to, segment_bounds, spf_sieve

__all__ = [
    "ExactRational",
    "Factorization",
    "SpfSegment",
    "arithmetic_derivative",
    "bernoulli_number",
    "carmichael_lambda",
    "euler_phi",
    "factorize",
    "gcd",
    "is_prime",
    "is_squarefree",
    "jacobi",
    "lcm",
    "mod_pow",
    "pollard_brent",
    "primes_up_to",
    "radical",
    "rational_congruent",
    "segment_bounds",
    "spf_sieve",
    "von_staudt_clausen_denominator",
]
