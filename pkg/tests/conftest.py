"""Collects the acceptance results and prints one line per criterion."""

import re

_RESULTS = {}


def pytest_runtest_logreport(report):
    m = re.search(r"test_acceptance\.py::test_criterion_(\d+)_(\w+)", report.nodeid)
    if not m:
        return
    key = int(m.group(1))
    if report.when == "call" or report.outcome != "passed":
        prev = _RESULTS.get(key, (m.group(2), "PASS"))[1]
        status = "PASS" if report.outcome == "passed" and prev == "PASS" else "FAIL"
        _RESULTS[key] = (m.group(2), status)


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_RESULTS):
        label, status = _RESULTS[key]
        terminalreporter.write_line(f"criterion {key}: {status}  {label.replace('_', ' ')}")
