import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from chowkit.arith import GF

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

P31 = 2**31 - 1


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def field():
    return GF(P31)


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("tests.test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])
