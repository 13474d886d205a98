import pytest

from ulrichcert.fields import PrimeField
from ulrichcert.kummer import Genus2Curve, load_corpus_quartic
from ulrichcert.picard import build_theta_star


@pytest.fixture(scope="session")
def gf():
    return PrimeField(32003)


@pytest.fixture(scope="session")
def curve():
    return Genus2Curve((1, -1, 2, -2, 3, -3))


@pytest.fixture(scope="session")
def quartic(gf):
    return load_corpus_quartic(gf)


@pytest.fixture(scope="session")
def theta():
    return build_theta_star()
