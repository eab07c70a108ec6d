import pytest

from triality8.exterior import Multivector
from triality8.structures import canonical_omega, canonical_rho


@pytest.fixture(scope="session")
def rho():
    return canonical_rho()


@pytest.fixture(scope="session")
def omega():
    return canonical_omega()


@pytest.fixture(scope="session")
def e():
    return Multivector.blade
