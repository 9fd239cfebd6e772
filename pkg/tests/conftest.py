import pytest

_outcomes: dict[str, list[bool]] = {}
_labels: dict[str, str] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(ident, label): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when != "call" and not report.failed:
        return
    ident, label = marker.args
    _labels[ident] = label
    _outcomes.setdefault(ident, []).append(report.passed)


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for ident in sorted(_outcomes, key=lambda s: int(s.lstrip("AC"))):
        status = "PASS" if all(_outcomes[ident]) else "FAIL"
        terminalreporter.write_line(f"{status}  {ident}  {_labels[ident]}")
