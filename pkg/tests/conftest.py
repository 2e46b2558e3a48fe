import pytest

from oracles import q8_table, s3_table
from voltlift.group import from_cayley_table


@pytest.fixture(scope="session")
def s3():
    return from_cayley_table(s3_table())


@pytest.fixture(scope="session")
def q8():
    return from_cayley_table(q8_table())


# one PASS/FAIL line per acceptance criterion in the terminal summary
_criteria: dict[int, tuple[str, bool]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, title = marker.args
    failed = report.failed or (report.when == "call" and not report.passed)
    if report.when == "call" or failed:
        ok = _criteria.get(number, (title, True))[1] and not failed
        _criteria[number] = (title, ok)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, ok = _criteria[number]
        terminalreporter.write_line(f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {title}")
