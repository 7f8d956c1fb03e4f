"""pytest configuration file

This governs the arguments we can pass pytest and keeps the user's
configuration file out of the test run.

Expensive checks (n = 5 spans, the (4,2,2) span, the Park_5 searches) are
marked `slow` and only run when --slow is passed.
"""

import pytest


def pytest_addoption(parser):
    parser.addoption(
        "--slow",
        action="store_true",
        default=False,
        help="also run the expensive span builds and extension searches",
    )


def pytest_collection_modifyitems(config, items):
    if config.getoption("--slow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --slow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture(autouse=True)
def isolated_config(tmp_path, monkeypatch):
    """Point the configuration file at a scratch directory and clear PARKEXT_* overrides.

    Yields:
        Path of the scratch config file.
    """
    from parkext import config
    from parkext.utils.constants import ENV_VARIABLES

    for variable in ENV_VARIABLES.values():
        monkeypatch.delenv(variable, raising=False)
    location = tmp_path / "config.yml"
    monkeypatch.setattr(config, "CONFIG_YML_LOCATION", location)
    yield location
