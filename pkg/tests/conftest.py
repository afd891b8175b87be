import pytest

from symtower.sset import sphere, wedge

_criteria = {}


@pytest.fixture(scope="session")
def s1():
    return sphere(1, 5)


@pytest.fixture(scope="session")
def s1_wedge_s1():
    return wedge(sphere(1, 5), sphere(1, 5))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when not in ("setup", "call"):
        return
    k = marker.args[0]
    if report.when == "call" or not report.passed:
        _criteria[k] = _criteria.get(k, True) and report.passed


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(_criteria):
        terminalreporter.write_line(f"criterion {k}: {'PASS' if _criteria[k] else 'FAIL'}")
