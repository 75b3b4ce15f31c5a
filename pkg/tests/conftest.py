import pytest

from alontarsi.verify import run_campaign


@pytest.fixture(scope="session")
def duality_reports():
    return run_campaign("duality")


@pytest.fixture(scope="session")
def thm2_reports():
    return run_campaign("thm2")


@pytest.fixture(scope="session")
def sandwich_reports():
    return run_campaign("sandwich")
