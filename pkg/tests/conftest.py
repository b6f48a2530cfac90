import pytest
from hypothesis import settings

from sdcyclic.gf2m import field_new

# property tests run derandomised by default; --hypothesis-seed N switches to that seed
settings.register_profile("repro", derandomize=True, deadline=None, max_examples=100)
settings.register_profile("seeded", derandomize=False, deadline=None, max_examples=100)
settings.load_profile("repro")

# (criterion number, line) pairs filled in by test_acceptance
ACCEPTANCE: list[tuple[int, str]] = []


def pytest_configure(config):
    if config.getoption("hypothesis_seed", None) is not None:
        settings.load_profile("seeded")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for _, line in sorted(ACCEPTANCE):
        terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def F2():
    return field_new(1)


@pytest.fixture(scope="session")
def F4():
    return field_new(2)


@pytest.fixture(scope="session")
def F8():
    return field_new(3)
