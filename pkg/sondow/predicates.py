"""
Membership tests for μ-Sondow numbers and their special families

Each characterization of μ-Sondow membership is computed on its own terms
(prime-power divisibility, power sums, Bernoulli numbers, Egyptian fractions,
a single congruence, the arithmetic derivative) so they can be checked
against each other. For n ≥ 1 and μ ∈ Z they all describe the same residue
class: n ∈ S_μ exactly when μ ≡ −Σ_{p|n} n/p (mod n).
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, NamedTuple, Optional, Tuple

from .arith import (
    Factorization,
    arithmetic_derivative,
    bernoulli_number,
    carmichael_lambda,
    euler_phi,
    factorize,
    rational_congruent,
)
from .config import OracleBounds
from .errors import (
    DomainError,
    InvalidExponentError,
    OracleBoundExceeded,
    OutOfRangeError,
    UnsupportedMuError,
)

logger = logging.getLogger("sondow.predicates")

EXPONENT_CHOICES = ("phi", "lambda")
BERNOULLI_MODES = ("congruence", "exact_oracle")


class Witness(NamedTuple):
    prime: int
    exponent: int
    residue: int  # (n/p + μ) mod p^s


@dataclass(frozen=True)
class SondowVerdict:
    n: int
    mu: int
    member: bool
    witnesses: Tuple[Witness, ...]

    def failing(self) -> Tuple[Witness, ...]:
        return tuple(w for w in self.witnesses if w.residue != 0)


@dataclass(frozen=True)
class CharacterizationFlags:
    """One flag per characterization; None means "not evaluated", never False"""
    divisibility: bool
    congruence_sum: bool
    egyptian: bool
    bernoulli: bool
    power_sum: Optional[bool] = None
    power_sum_lambda: Optional[bool] = None
    bernoulli_exact: Optional[bool] = None
    derivative: Optional[bool] = None

    def present(self) -> Dict[str, bool]:
        return {name: value for name, value in self.to_dict().items() if value is not None}

    @property
    def agree(self) -> bool:
        return len(set(self.present().values())) == 1

    def to_dict(self) -> Dict[str, Optional[bool]]:
        return {
            "divisibility": self.divisibility,
            "power_sum": self.power_sum,
            "power_sum_lambda": self.power_sum_lambda,
            "bernoulli": self.bernoulli,
            "bernoulli_exact": self.bernoulli_exact,
            "egyptian": self.egyptian,
            "congruence_sum": self.congruence_sum,
            "derivative": self.derivative,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Optional[bool]]) -> "CharacterizationFlags":
        return cls(**{key: data.get(key) for key in cls.__dataclass_fields__})


# ==================== Residue class ====================

def prime_part_sum(f: Factorization) -> int:
    """Σ_{p|n} n/p"""
    return sum(f.value // p for p in f.primes)


def canonical_mu(f: Factorization) -> int:
    """The residue μ* in [0, n) with n ∈ S_μ ⟺ μ ≡ μ* (mod n)"""
    return -prime_part_sum(f) % f.value


def complementary_mu(f: Factorization) -> Tuple[int, int]:
    """The two members of the class in (−n, n): μ* and μ* − n"""
    mu_star = canonical_mu(f)
    return mu_star, mu_star - f.value


# ==================== Divisibility (definition) ====================

def is_mu_sondow(f: Factorization, mu: int) -> SondowVerdict:
    """p^s | (n/p + μ) for every prime power p^s exactly dividing n"""
    n = f.value
    witnesses = tuple(
        Witness(p, s, (n // p + mu) % p ** s)
        for p, s in f.factors
    )
    return SondowVerdict(n=n, mu=mu, member=all(w.residue == 0 for w in witnesses), witnesses=witnesses)


def congruence_sum_check(f: Factorization, mu: int) -> bool:
    return (prime_part_sum(f) + mu) % f.value == 0


# ==================== Power sums ====================

@lru_cache(maxsize=8192)
def power_sum(n: int, exponent_choice: str = "phi") -> int:
    """Σ_{i=1}^{n−1} i^k mod n with k = φ(n) or λ(n)"""
    if exponent_choice not in EXPONENT_CHOICES:
        raise ValueError(f"exponent_choice must be one of {EXPONENT_CHOICES}, got {exponent_choice!r}")
    if n == 1:
        return 0
    f = factorize(n)
    k = euler_phi(f) if exponent_choice == "phi" else carmichael_lambda(f)
    return sum(pow(i, k, n) for i in range(1, n)) % n


def power_sum_check(n: int, mu: int, exponent_choice: str = "phi", max_n: Optional[int] = None) -> bool:
    if n < 1:
        raise DomainError(f"power sums need n >= 1, got {n}")
    limit = OracleBounds().power_sum_max_n if max_n is None else max_n
    if n > limit:
        raise OracleBoundExceeded(f"power-sum oracle limited to n <= {limit}, got {n}")
    if n == 1:
        return True
    return (power_sum(n, exponent_choice) - mu) % n == 0


# ==================== Bernoulli numbers ====================

def _divisor_prime_sum(f: Factorization, k: int) -> int:
    n = f.value
    return -sum(n // p for p in f.primes if k % (p - 1) == 0) % n


def power_sum_residue(f: Factorization, k: int) -> int:
    """(−Σ_{p|n, (p−1)|k} n/p) mod n, the residue of n·B_k and of Σ i^k"""
    if f.value < 2:
        raise DomainError(f"power_sum_residue needs n >= 2, got {f.value}")
    if k < 1 or k % 2:
        raise InvalidExponentError(f"k must be a positive even integer, got {k}")
    return _divisor_prime_sum(f, k)


def bernoulli_check(f: Factorization, mu: int, mode: str = "congruence", max_k: Optional[int] = None) -> bool:
    """n·B_φ(n) ≡ μ (mod n)"""
    if mode not in BERNOULLI_MODES:
        raise ValueError(f"mode must be one of {BERNOULLI_MODES}, got {mode!r}")
    n = f.value
    if n == 1:
        return True
    k = euler_phi(f)
    if mode == "congruence":
        # φ(2) = 1 is the only odd totient; the prime-sum form still holds there.
        return (_divisor_prime_sum(f, k) - mu) % n == 0

    limit = OracleBounds().bernoulli_max_k if max_k is None else max_k
    if k > limit:
        raise OutOfRangeError(f"exact Bernoulli oracle limited to phi(n) <= {limit}, got {k}")
    return rational_congruent(n * bernoulli_number(k, max_k=limit), Fraction(mu), n)


# ==================== Egyptian fractions ====================

def reciprocal_sum(f: Factorization) -> Fraction:
    """Σ_{p|n} 1/p"""
    return sum((Fraction(1, p) for p in f.primes), Fraction(0))


def egyptian_sum(f: Factorization, mu: int) -> Fraction:
    return Fraction(mu, f.value) + reciprocal_sum(f)


def egyptian_check(f: Factorization, mu: int) -> bool:
    """μ/n + Σ 1/p ∈ Z.

    For μ = 1 and n ≥ 2 the sum is positive, so this is the same as asking
    for a natural number.
    """
    return egyptian_sum(f, mu).denominator == 1


def weak_ppp_check(f: Factorization) -> bool:
    """1/n + Σ 1/p is a positive integer"""
    total = egyptian_sum(f, 1)
    return total.denominator == 1 and total > 0


def giuga_egyptian_check(f: Factorization) -> bool:
    """Composite n with Σ 1/p − 1/n a positive integer"""
    if not f.is_composite():
        return False
    total = egyptian_sum(f, -1)
    return total.denominator == 1 and total > 0


# ==================== Arithmetic derivative ====================

def derivative_check(f: Factorization, mu: int) -> bool:
    """n' = a·n − μ for some integer a ≥ 1 (μ = ±1 only)"""
    if mu not in (-1, 1):
        raise UnsupportedMuError(f"the derivative characterization exists only for mu = +-1, got {mu}")
    a, r = divmod(arithmetic_derivative(f) + mu, f.value)
    return r == 0 and a >= 1


# ==================== Families ====================

def is_giuga(f: Factorization) -> bool:
    return f.is_composite() and is_mu_sondow(f, -1).member


def is_weak_ppp(f: Factorization) -> bool:
    return is_mu_sondow(f, 1).member


def is_primary_ppp(f: Factorization) -> bool:
    if f.value < 2:
        raise DomainError("primary pseudoperfect numbers are defined for n > 1")
    return egyptian_sum(f, 1) == 1


# ==================== All characterizations ====================

def classify(f: Factorization, mu: int, oracle_bounds: Optional[OracleBounds] = None) -> CharacterizationFlags:
    """Evaluate every characterization whose preconditions hold"""
    bounds = oracle_bounds or OracleBounds()
    n = f.value

    power = power_lambda = None
    if n <= bounds.power_sum_max_n:
        power = power_sum_check(n, mu, "phi", max_n=bounds.power_sum_max_n)
        power_lambda = power_sum_check(n, mu, "lambda", max_n=bounds.power_sum_max_n)

    try:
        exact = bernoulli_check(f, mu, "exact_oracle", max_k=bounds.bernoulli_max_k)
    except OutOfRangeError:
        exact = None

    derivative = None
    if mu == 1 or (mu == -1 and f.is_composite()):
        derivative = derivative_check(f, mu)

    flags = CharacterizationFlags(
        divisibility=is_mu_sondow(f, mu).member,
        congruence_sum=congruence_sum_check(f, mu),
        egyptian=egyptian_check(f, mu),
        bernoulli=bernoulli_check(f, mu, "congruence"),
        power_sum=power,
        power_sum_lambda=power_lambda,
        bernoulli_exact=exact,
        derivative=derivative,
    )
    if not flags.agree:
        logger.warning(f"Characterizations disagree for n={n}, mu={mu}: {flags.present()}")
    return flags
