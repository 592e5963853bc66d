"""
Shared fixtures
"""

import pytest

from sondow.arith import Factorization, factorize
from sondow.catalog import SondowCatalog
from sondow.config import SondowConfig

M61 = 2 ** 61 - 1
M89 = 2 ** 89 - 1


@pytest.fixture(scope="session")
def catalog():
    return SondowCatalog(SondowConfig())


@pytest.fixture(scope="session")
def giuga_factorizations(catalog):
    return [catalog.hints[v].factorization for v in catalog.known_values("giuga")]


@pytest.fixture(scope="session")
def primary_ppp_factorizations(catalog):
    return [catalog.hints[v].factorization for v in catalog.known_values("primary_ppp")]


@pytest.fixture
def fact():
    """Factor small test values"""
    def _fact(n: int) -> Factorization:
        return factorize(n)
    return _fact
