import pytest

from momentcone.ressayre import kronecker_cone


@pytest.fixture(scope="session")
def cone_222():
    return kronecker_cone(2, 2, 2)


@pytest.fixture(scope="session")
def cone_333():
    return kronecker_cone(3, 3, 3)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
