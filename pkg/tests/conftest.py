import pytest

from sblocus import load
from sblocus.inference import default_decomposition

REGIMES = ("deg2", "deg3_general", "deg3_lines")


@pytest.fixture(scope="session", params=REGIMES)
def regime(request):
    return request.param


@pytest.fixture(scope="session")
def catalog(regime):
    return load(regime)


@pytest.fixture(scope="session")
def decomposition(regime):
    return default_decomposition(regime)
