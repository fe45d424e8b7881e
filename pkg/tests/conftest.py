import pytest

_criteria_key = pytest.StashKey[dict]()


def pytest_configure(config):
    config.stash[_criteria_key] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when not in ("setup", "call"):
        return
    number, title = marker.args
    results = item.config.stash[_criteria_key]
    passed = report.passed and results.get(number, (title, True))[1]
    if report.when == "call" or not report.passed:
        results[number] = (title, passed)


def pytest_terminal_summary(terminalreporter, config):
    results = config.stash[_criteria_key]
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        title, passed = results[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if passed else 'FAIL'}  {title}")
