import os
import random

import pytest
from hypothesis import HealthCheck, settings

from contractad_lab import _backend
from contractad_lab.graph import enumerate_connected_graphs

settings.register_profile("default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture(scope="session")
def small_graphs():
    """Every labelled connected graph with n <= 5."""
    return [g for n in range(1, 6) for g in enumerate_connected_graphs(n)]


@pytest.fixture
def rng():
    return random.Random(12345)


@pytest.fixture(params=sorted(_backend.available()))
def backend(request):
    return _backend.available()[request.param]
