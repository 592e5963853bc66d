"""
Sondow
mu-Sondow numbers, Giuga numbers and weak primary pseudoperfect numbers:
membership, constructions, range search and corpus cross-checks
"""

from .arith import Factorization, factorize, is_prime
from .constructions import extend_by_successor, lift, reduce_by_gcd
from .errors import BudgetError, SondowError
from .predicates import canonical_mu, classify, is_giuga, is_mu_sondow, is_primary_ppp, is_weak_ppp
from .search import search_range

__version__ = "0.1.0"

__all__ = [
    "BudgetError",
    "Factorization",
    "SondowError",
    "canonical_mu",
    "classify",
    "extend_by_successor",
    "factorize",
    "is_giuga",
    "is_mu_sondow",
    "is_primary_ppp",
    "is_prime",
    "is_weak_ppp",
    "lift",
    "reduce_by_gcd",
    "search_range",
]
