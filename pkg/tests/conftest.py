from __future__ import annotations

import pytest
from hypothesis import HealthCheck, settings

from tribell import example1_settings, example2_settings, ghz_state, pure_density, w_state

settings.register_profile(
    "default", deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@pytest.fixture(scope="session")
def ex1():
    return example1_settings()


@pytest.fixture(scope="session")
def ex2():
    return example2_settings()


@pytest.fixture(scope="session")
def rho_w():
    return pure_density(w_state())


@pytest.fixture(scope="session")
def rho_ghz():
    return pure_density(ghz_state())
