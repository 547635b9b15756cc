import pytest

from anhomlogic.suites import run_suite

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def all_suites_n3():
    return run_suite("all", 3)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
