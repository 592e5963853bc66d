"""
Canonical prime-power factorizations
"""

from dataclasses import dataclass
from math import prod
from typing import Iterable, List, Sequence, Tuple, Union

from ..errors import FactorHintError

PrimePower = Tuple[int, int]


@dataclass(frozen=True)
class Factorization:
    """n = ∏ p^e with primes strictly increasing and every exponent ≥ 1.

    Construct through `from_factors` (validates) or `of_prime`; the plain
    constructor trusts its arguments and is reserved for code that has
    already produced canonical output (trial division, the sieve).
    """
    value: int
    factors: Tuple[PrimePower, ...] = ()

    @classmethod
    def one(cls) -> "Factorization":
        return cls(1, ())

    @classmethod
    def of_prime(cls, p: int, exponent: int = 1) -> "Factorization":
        return cls(p ** exponent, ((p, exponent),))

    @classmethod
    def from_factors(cls, factors: Iterable[PrimePower], value: Union[int, None] = None) -> "Factorization":
        """Build from (prime, exponent) pairs in any order, merging repeats.

        Primality of the primes is not checked here; see
        `sondow.corpus.FactorListInput` for fully validated hints.
        """
        merged: dict = {}
        for p, e in factors:
            p, e = int(p), int(e)
            if p < 2:
                raise FactorHintError(f"{p} is not a prime")
            if e < 1:
                raise FactorHintError(f"exponent of {p} must be >= 1, got {e}")
            merged[p] = merged.get(p, 0) + e
        canonical = tuple(sorted(merged.items()))
        product = prod(p ** e for p, e in canonical)
        if value is not None and product != value:
            raise FactorHintError(f"factors multiply to {product}, not {value}")
        return cls(product, canonical)

    @classmethod
    def from_pairs(cls, pairs: Sequence[Sequence[Union[str, int]]]) -> "Factorization":
        """Inverse of `to_pairs` (decimal strings or ints)"""
        return cls.from_factors((int(p), int(e)) for p, e in pairs)

    def to_pairs(self) -> List[List[str]]:
        """JSON-safe form: [["p", "e"], ...] with decimal-string integers"""
        return [[str(p), str(e)] for p, e in self.factors]

    @property
    def primes(self) -> Tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    @property
    def omega(self) -> int:
        """Number of distinct prime factors"""
        return len(self.factors)

    def exponent_of(self, p: int) -> int:
        for q, e in self.factors:
            if q == p:
                return e
        return 0

    def is_prime(self) -> bool:
        return len(self.factors) == 1 and self.factors[0][1] == 1

    def is_composite(self) -> bool:
        return self.value > 1 and not self.is_prime()

    def multiply(self, other: "Factorization") -> "Factorization":
        return Factorization.from_factors(self.factors + other.factors)

    def divide(self, divisor: "Factorization") -> "Factorization":
        """Exact quotient self / divisor"""
        remaining = dict(self.factors)
        for p, e in divisor.factors:
            if remaining.get(p, 0) < e:
                raise ValueError(f"{divisor.value} does not divide {self.value}")
            remaining[p] -= e
        return Factorization.from_factors((p, e) for p, e in remaining.items() if e > 0)

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return "·".join(str(p) if e == 1 else f"{p}^{e}" for p, e in self.factors)
