import pytest
from hypothesis import HealthCheck, settings


settings.register_profile(
    "sgc",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.register_profile("sgc-thorough", settings.get_profile("sgc"), max_examples=500)
settings.load_profile("sgc")


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="run slow sweeps")


def pytest_configure(config):
    if config.getoption("--runslow"):
        settings.load_profile("sgc-thorough")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)
