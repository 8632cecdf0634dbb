import pytest

from cosetlab.coxgroup import build_group

SMALL = ["A1", "A2", "B2", "G2", "A3"]
IN_SCOPE = ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "D4", "G2", "F4"]


@pytest.fixture(scope="session")
def groups():
    return build_group


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for k in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[k])
