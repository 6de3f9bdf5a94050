import time

import pytest

_criteria: list[tuple[str, str, float]] = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    title = getattr(item.function, "criterion", None)
    if title is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        status = "PASS" if report.passed else "FAIL"
        _criteria.append((status, title, report.duration))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for status, title, seconds in _criteria:
        terminalreporter.write_line(f"{status} {title} ({seconds:.1f} s)")


def criterion(title):
    def mark(fn):
        fn.criterion = title
        return fn

    return mark


@pytest.fixture
def stopwatch():
    start = time.perf_counter()
    return lambda: time.perf_counter() - start
