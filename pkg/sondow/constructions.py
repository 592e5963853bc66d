"""
Constructions between Sondow families

Every result is re-checked with `is_mu_sondow` before it is returned.
"""

import logging
from dataclasses import dataclass
from typing import Iterable, List, NamedTuple, Tuple

from .arith import Factorization, factorize, gcd, is_prime, is_squarefree, radical
from .errors import (
    MembershipFailed,
    NotAMultiple,
    NotApplicable,
    NotASondowNumber,
    PreconditionFailed,
    RadicalConditionFailed,
    UnsupportedMuError,
)
from .predicates import is_mu_sondow, is_weak_ppp

logger = logging.getLogger("sondow.constructions")


@dataclass(frozen=True)
class LiftResult:
    input_n: int
    input_mu: int
    output_n: int
    output_mu: int
    output_factorization: Factorization
    verified: bool


class ConverseReport(NamedTuple):
    n: int
    radical_divides: bool
    base_member: bool


def _sign(mu: int) -> int:
    return 1 if mu > 0 else -1


def _check_lift_mu(mu: int) -> None:
    if abs(mu) <= 1:
        raise UnsupportedMuError(f"lifting needs |mu| > 1, got {mu}")


# ==================== Successor extension ====================

def extend_by_successor(f: Factorization) -> Factorization:
    """n ∈ W and n + 1 prime ⟹ n(n + 1) ∈ W"""
    n = f.value
    if not is_weak_ppp(f):
        raise PreconditionFailed(f"{n} is not a weak primary pseudoperfect number")
    if not is_prime(n + 1):
        raise NotApplicable(f"{n} + 1 = {n + 1} is not prime")
    extended = f.multiply(Factorization.of_prime(n + 1))
    if not is_weak_ppp(extended):
        raise AssertionError(f"successor extension of {n} failed verification")
    return extended


def successor_chain(start: int = 2) -> Tuple[int, ...]:
    """Iterate extend_by_successor until n + 1 is composite"""
    f = factorize(start)
    chain = [f.value]
    while True:
        try:
            f = extend_by_successor(f)
        except NotApplicable:
            break
        chain.append(f.value)
    return tuple(chain)


# ==================== Radical lifting ====================

def lift(f: Factorization, mu: int) -> LiftResult:
    """n ↦ |μ|·n ∈ S_μ, valid when Rad(|μ|) | n and n ∈ S_sgn(μ)"""
    _check_lift_mu(mu)
    n = f.value
    m = abs(mu)
    if n % radical(factorize(m)) != 0:
        raise RadicalConditionFailed(f"Rad({m}) does not divide {n}")
    if not is_mu_sondow(f, _sign(mu)).member:
        raise MembershipFailed(f"{n} is not a {_sign(mu)}-Sondow number")

    output = f.multiply(factorize(m))
    verified = is_mu_sondow(output, mu).member
    if not verified:
        logger.warning(f"Lift of {n} by mu={mu} produced {output.value}, which failed verification")
    return LiftResult(
        input_n=n,
        input_mu=_sign(mu),
        output_n=output.value,
        output_mu=mu,
        output_factorization=output,
        verified=verified,
    )


def lift_converse_check(f_of_value: Factorization, mu: int) -> ConverseReport:
    """Split value = |μ|·n and report the two conditions of the lifting criterion"""
    _check_lift_mu(mu)
    m = abs(mu)
    value = f_of_value.value
    if value % m != 0:
        raise NotAMultiple(f"{value} is not a multiple of {m}")
    base = f_of_value.divide(factorize(m))
    return ConverseReport(
        n=base.value,
        radical_divides=base.value % radical(factorize(m)) == 0,
        base_member=is_mu_sondow(base, _sign(mu)).member,
    )


def lift_family(bases: Iterable[Factorization], mu: int) -> List[LiftResult]:
    """Lift every base that meets both lifting conditions"""
    _check_lift_mu(mu)
    rad = radical(factorize(abs(mu)))
    results = []
    for f in bases:
        if f.value % rad == 0 and is_mu_sondow(f, _sign(mu)).member:
            results.append(lift(f, mu))
    return results


# ==================== gcd reduction ====================

def reduce_by_gcd(f: Factorization, mu: int) -> Tuple[Factorization, int]:
    """For n ∈ S_μ and δ = gcd(n, μ): n/δ is squarefree and (μ/δ)-Sondow"""
    if mu == 0 or not is_mu_sondow(f, mu).member:
        raise NotASondowNumber(f"{f.value} is not a {mu}-Sondow number")
    delta = gcd(f.value, mu)
    reduced = f.divide(factorize(delta))
    reduced_mu = mu // delta
    if not (is_squarefree(reduced) and is_mu_sondow(reduced, reduced_mu).member):
        raise AssertionError(
            f"gcd reduction of ({f.value}, {mu}) gave ({reduced.value}, {reduced_mu}), "
            "which is not a squarefree Sondow pair"
        )
    return reduced, reduced_mu
