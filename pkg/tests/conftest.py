import pytest

from diagcubic.paper_suite import FAULTS, full_report, inject_fault


@pytest.fixture(scope="session")
def clean_reports():
    return full_report()


@pytest.fixture(scope="session")
def fault_reports():
    """fault name -> {check name: report} with that single fault injected."""
    return {f: {r.name: r for r in full_report(inject_fault(f))} for f in sorted(FAULTS)}


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
