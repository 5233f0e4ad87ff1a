import pytest
from hypothesis import HealthCheck, settings

from clawdiamond.oracle import generate_levels

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@pytest.fixture(scope="session")
def levels():
    """Connected subcubic triangle-free graphs by order, up to 10 vertices."""
    return generate_levels(10)


@pytest.fixture(scope="session")
def small_graphs(levels):
    return [g for level in levels for g in level]


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
