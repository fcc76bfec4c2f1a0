import pytest

from gwcp3 import compute_table

ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def table6():
    """Genus 0 and genus 1 through degree 6.  Shared: do not mutate."""
    return compute_table(6)


@pytest.fixture
def acceptance_report():
    def record(number, title, passed, detail=""):
        status = "PASS" if passed else "FAIL"
        ACCEPTANCE_LINES.append(f"[{status}] criterion {number}: {title}" + (f" ({detail})" if detail else ""))
        return passed
    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split("criterion ")[1].split(":")[0])):
            terminalreporter.write_line(line)
