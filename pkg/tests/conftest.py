import os

import pytest
from hypothesis import HealthCheck, settings

from riordan.rings import ring_from_tag

settings.register_profile(
    "default",
    max_examples=25,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.register_profile(
    "thorough",
    max_examples=200,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture
def ZZ():
    return ring_from_tag("int")


@pytest.fixture
def QQ():
    return ring_from_tag("rational")


@pytest.fixture
def F7():
    return ring_from_tag("modp:7")


@pytest.fixture(params=["int", "rational", "modp:7"])
def any_ring(request):
    return ring_from_tag(request.param)
