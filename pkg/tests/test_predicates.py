from fractions import Fraction

import pytest

from sondow.arith import Factorization, factorize, is_squarefree, spf_sieve
from sondow.config import OracleBounds
from sondow.errors import (
    DomainError,
    InvalidExponentError,
    OracleBoundExceeded,
    OutOfRangeError,
    UnsupportedMuError,
)
from sondow.predicates import (
    CharacterizationFlags,
    Witness,
    bernoulli_check,
    canonical_mu,
    classify,
    complementary_mu,
    congruence_sum_check,
    derivative_check,
    egyptian_check,
    egyptian_sum,
    giuga_egyptian_check,
    is_giuga,
    is_mu_sondow,
    is_primary_ppp,
    is_weak_ppp,
    power_sum_residue,
    power_sum_check,
    weak_ppp_check,
)


# ==================== Residue class ====================

@pytest.mark.parametrize("n,expected", [(30, 29), (6, 1), (1, 0), (10, 3), (9, 6)])
def test_canonical_mu(n, expected):
    assert canonical_mu(factorize(n)) == expected


def test_complementary_mu():
    assert complementary_mu(factorize(30)) == (29, -1)
    assert complementary_mu(factorize(6)) == (1, -5)


def test_residue_class_law():
    for n in range(1, 2001):
        f = factorize(n)
        mu_star = canonical_mu(f)
        assert is_mu_sondow(f, mu_star).member
        assert is_mu_sondow(f, mu_star - n).member
        for mu in (mu_star + 1, mu_star - 2 * n, -3 * n, 2 * n - 1):
            assert is_mu_sondow(f, mu).member == (mu % n == mu_star), (n, mu)


@pytest.mark.slow
def test_residue_class_law_full():
    for n in range(1, 10 ** 4 + 1):
        f = factorize(n)
        mu_star = canonical_mu(f)
        for mu in range(-3 * n, 3 * n, max(1, n // 7)):
            assert is_mu_sondow(f, mu).member == (mu % n == mu_star), (n, mu)


# ==================== Divisibility ====================

def test_is_mu_sondow_witnesses():
    verdict = is_mu_sondow(factorize(25), -5)
    assert verdict.member
    assert verdict.witnesses == (Witness(5, 2, 0),)
    assert verdict.failing() == ()


def test_one_is_in_every_class():
    verdict = is_mu_sondow(Factorization.one(), 17)
    assert verdict.member
    assert verdict.witnesses == ()


def test_is_mu_sondow_failing_witness():
    verdict = is_mu_sondow(factorize(4), 16)
    assert not verdict.member
    assert verdict.failing() == (Witness(2, 2, 2),)


def test_zero_class_is_only_one():
    for n in range(2, 10 ** 4):
        assert not is_mu_sondow(factorize(n), 0).member


@pytest.mark.parametrize("n,mu", [(150, -5), (858, -1), (1, 12345), (1806, 1)])
def test_congruence_sum_check(n, mu):
    assert congruence_sum_check(factorize(n), mu)


# ==================== Power sums and Bernoulli numbers ====================

@pytest.mark.parametrize("n,mu,expected", [(6, 1, True), (30, -1, True), (4, 1, False), (1, 5, True)])
def test_power_sum_check(n, mu, expected):
    assert power_sum_check(n, mu, "phi") is expected
    assert power_sum_check(n, mu, "lambda") is expected


def test_power_sum_bound():
    with pytest.raises(OracleBoundExceeded):
        power_sum_check(1000, 1, max_n=100)
    with pytest.raises(DomainError):
        power_sum_check(0, 1)
    with pytest.raises(ValueError):
        power_sum_check(6, 1, "psi")


@pytest.mark.parametrize("n,k,expected", [(30, 8, 29), (6, 4, 1), (15, 2, 10)])
def test_power_sum_residue(n, k, expected):
    assert power_sum_residue(factorize(n), k) == expected


def test_power_sum_residue_errors():
    with pytest.raises(InvalidExponentError):
        power_sum_residue(factorize(30), 3)
    with pytest.raises(DomainError):
        power_sum_residue(Factorization.one(), 2)


@pytest.mark.parametrize("n,mu,mode,expected", [
    (30, -1, "exact_oracle", True),
    (6, 1, "exact_oracle", True),
    (4, 1, "congruence", False),
    (30, -1, "congruence", True),
    (2, 1, "congruence", True),
])
def test_bernoulli_check(n, mu, mode, expected):
    assert bernoulli_check(factorize(n), mu, mode) is expected


def test_bernoulli_exact_oracle_bound():
    with pytest.raises(OutOfRangeError):
        bernoulli_check(factorize(1806), 1, "exact_oracle", max_k=100)


# ==================== Egyptian fractions and derivative ====================

def test_egyptian_sums():
    assert egyptian_sum(factorize(42), 1) == 1
    assert egyptian_sum(factorize(30), -1) == 1
    assert egyptian_sum(factorize(30), 1) == Fraction(32, 30)
    assert egyptian_check(factorize(42), 1)
    assert egyptian_check(factorize(30), -1)
    assert egyptian_check(Factorization.one(), -7)
    assert not egyptian_check(factorize(30), 1)


def test_weak_and_giuga_egyptian_forms():
    assert weak_ppp_check(factorize(1806))
    assert not weak_ppp_check(factorize(30))
    assert giuga_egyptian_check(factorize(858))
    assert not giuga_egyptian_check(factorize(7))


@pytest.mark.parametrize("n,mu,expected", [(42, 1, True), (30, -1, True), (7, -1, False), (1, 1, True), (4, 1, False)])
def test_derivative_check(n, mu, expected):
    assert derivative_check(factorize(n), mu) is expected


def test_derivative_check_needs_unit_mu():
    with pytest.raises(UnsupportedMuError):
        derivative_check(factorize(30), 2)


def test_derivative_law():
    segment = spf_sieve(2, 10 ** 5)
    for n in range(2, 10 ** 5 + 1):
        f = segment.factorize(n)
        assert derivative_check(f, 1) == is_weak_ppp(f), n
        if f.is_composite():
            assert derivative_check(f, -1) == is_giuga(f), n


# ==================== Families ====================

@pytest.mark.parametrize("n,expected", [(30, True), (13, False), (1722, True), (1, False), (31, False)])
def test_is_giuga(n, expected):
    assert is_giuga(factorize(n)) is expected


@pytest.mark.parametrize("n,expected", [(47058, True), (1, True), (4, False), (2, True)])
def test_is_weak_ppp(n, expected):
    assert is_weak_ppp(factorize(n)) is expected


@pytest.mark.parametrize("n,expected", [(2, True), (30, False), (1806, True), (6, True)])
def test_is_primary_ppp(n, expected):
    assert is_primary_ppp(factorize(n)) is expected


def test_is_primary_ppp_large(primary_ppp_factorizations):
    for f in primary_ppp_factorizations:
        assert is_primary_ppp(f)
        assert is_weak_ppp(f)


def test_known_giuga_numbers(giuga_factorizations):
    assert len(giuga_factorizations) == 13
    assert len(str(giuga_factorizations[-1].value)) == 97
    assert giuga_factorizations[-1].omega == 10
    for f in giuga_factorizations:
        assert is_giuga(f)
        assert giuga_egyptian_check(f)
        assert derivative_check(f, -1)


def test_is_primary_ppp_excludes_one():
    with pytest.raises(DomainError):
        is_primary_ppp(Factorization.one())


def test_members_are_squarefree():
    for n in range(2, 20001):
        f = factorize(n)
        if is_weak_ppp(f) or is_giuga(f):
            assert is_squarefree(f), n


@pytest.mark.slow
def test_members_are_squarefree_full():
    segment = spf_sieve(2, 10 ** 6)
    for n in range(2, 10 ** 6 + 1):
        f = segment.factorize(n)
        if is_weak_ppp(f) or is_giuga(f):
            assert is_squarefree(f), n


@pytest.mark.slow
def test_primary_ppp_are_weak_ppp_full():
    segment = spf_sieve(2, 10 ** 6)
    primary = []
    for n in range(2, 10 ** 6 + 1):
        f = segment.factorize(n)
        if is_primary_ppp(f):
            assert is_weak_ppp(f), n
            primary.append(n)
    assert primary == [2, 6, 42, 1806, 47058]


# ==================== classify ====================

@pytest.mark.parametrize("n,mu", [(1806, 1), (10, 3), (9, 6), (30, -1), (25, -5)])
def test_classify_members(n, mu):
    flags = classify(factorize(n), mu)
    assert flags.agree
    assert all(flags.present().values())


def test_classify_non_member():
    flags = classify(factorize(4), 1)
    assert flags.agree
    assert not any(flags.present().values())
    assert flags.derivative is False


def test_classify_skips_oracles_above_bounds():
    flags = classify(factorize(1806), 1, OracleBounds(power_sum_max_n=100, bernoulli_max_k=50))
    assert flags.power_sum is None
    assert flags.power_sum_lambda is None
    assert flags.bernoulli_exact is None
    assert flags.derivative is True
    assert flags.agree


def test_classify_derivative_only_on_composites_for_minus_one():
    assert classify(factorize(7), -1).derivative is None
    assert classify(factorize(7), 2).derivative is None


def test_flags_dict_round_trip():
    flags = classify(factorize(30), -1)
    assert CharacterizationFlags.from_dict(flags.to_dict()) == flags


def test_equivalence_sweep():
    bounds = OracleBounds(power_sum_max_n=400, bernoulli_max_k=60)
    for n in range(1, 401):
        f = factorize(n)
        for mu in range(-10, 11):
            flags = classify(f, mu, bounds)
            assert flags.agree, (n, mu, flags)


@pytest.mark.slow
def test_equivalence_sweep_full():
    bounds = OracleBounds(power_sum_max_n=3000, bernoulli_max_k=500)
    for n in range(1, 3001):
        f = factorize(n)
        for mu in range(-10, 11):
            flags = classify(f, mu, bounds)
            assert flags.agree, (n, mu, flags)
