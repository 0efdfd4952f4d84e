"""Prints one PASS/FAIL line per acceptance criterion after the run."""

import re

_CRITERION = re.compile(r"test_criterion_(\d+)_")
_titles: dict[int, str] = {}
_passed: dict[int, bool] = {}


def pytest_collection_modifyitems(items):
    for item in items:
        m = _CRITERION.search(item.nodeid)
        if m:
            doc = (item.function.__doc__ or "").strip().splitlines()
            _titles[int(m.group(1))] = doc[0] if doc else ""


def pytest_runtest_logreport(report):
    m = _CRITERION.search(report.nodeid)
    if not m:
        return
    n = int(m.group(1))
    # setup/teardown errors count as failures too
    if report.when == "call" or report.failed:
        _passed[n] = _passed.get(n, True) and report.passed


def pytest_terminal_summary(terminalreporter):
    if not _passed:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_passed):
        status = "PASS" if _passed[n] else "FAIL"
        terminalreporter.write_line(f"criterion {n:2d}: {status}  {_titles.get(n, '')}")
