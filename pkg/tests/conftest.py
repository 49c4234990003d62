import pytest

from secantdesigns.geometry import default_conic
from secantdesigns.ree import default_model, example_designs


@pytest.fixture(scope="session")
def conic():
    return default_conic()


@pytest.fixture(scope="session")
def plane(conic):
    return conic.plane


@pytest.fixture(scope="session")
def model():
    return default_model()


@pytest.fixture(scope="session")
def designs(model):
    return example_designs(model)
