"""Collects one PASS/FAIL line per acceptance criterion (tests marked ``acceptance``)."""
import pytest

_criteria: dict[str, bool] = {}


def pytest_runtest_logreport(report):
    tag = getattr(report, "acceptance_tag", None)
    if tag and (report.when == "call" or report.failed):
        _criteria[tag] = _criteria.get(tag, True) and report.passed


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    marker = item.get_closest_marker("acceptance")
    if marker:
        outcome.get_result().acceptance_tag = marker.args[0]


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for tag in sorted(_criteria, key=lambda t: int(t[2:])):
        terminalreporter.write_line(f"{tag}: {'PASS' if _criteria[tag] else 'FAIL'}")
