import pytest
from hypothesis import HealthCheck, settings

from pullback_lvalues.bernoulli import reset_bernoulli_cache
from pullback_lvalues.qseries import delta_qexp

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@pytest.fixture(scope="session")
def delta_long():
    """Delta to 4001 coefficients, enough for every numeric cutoff used in the tests."""
    return delta_qexp(4001)


@pytest.fixture(autouse=True)
def clean_bernoulli_cache():
    yield
    reset_bernoulli_cache()
