import pytest
from hypothesis import HealthCheck, settings

from sternbrocot import first_level, next_level

settings.register_profile(
    "exact",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("exact")


@pytest.fixture(scope="session")
def stern_chain():
    """Mediant-construction levels 0..12, built once for the whole run."""
    levels = [first_level()]
    while levels[-1].index < 12:
        levels.append(next_level(levels[-1]))
    return levels
