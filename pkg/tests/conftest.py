import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

# Acceptance tests carry @pytest.mark.acceptance(number, title).  Each criterion
# gets one PASS/FAIL line in the terminal summary, whatever the capture mode.
_criteria: dict[int, list] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    num, title = marker.args
    entry = _criteria.setdefault(num, [title, True])
    report = outcome.get_result()
    if report.failed:
        entry[1] = False


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_criteria):
        title, ok = _criteria[num]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {num:>2}. {title}")
