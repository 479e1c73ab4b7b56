import hypothesis
import pytest

from dyncross.fixtures import FIXTURES

hypothesis.settings.register_profile(
    "dyncross", max_examples=40, deadline=None,
    suppress_health_check=[hypothesis.HealthCheck.too_slow])
hypothesis.settings.load_profile("dyncross")


@pytest.fixture(params=sorted(FIXTURES))
def system(request):
    """One of the five bundled systems."""
    return FIXTURES[request.param]()


@pytest.fixture
def one_point():
    return FIXTURES["one_point"]()


@pytest.fixture
def swap2():
    return FIXTURES["swap2"]()


@pytest.fixture
def cycle3():
    return FIXTURES["cycle3"]()


@pytest.fixture
def int_shift8():
    return FIXTURES["int_shift8"]()


@pytest.fixture
def tails8():
    return FIXTURES["tails8"]()
