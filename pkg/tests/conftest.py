import pytest

_criteria: dict[int, dict] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    marker = _markers.get(report.nodeid)
    if marker is None:
        return
    number, title = marker
    row = _criteria.setdefault(number, {"title": title, "ok": True})
    row["ok"] = row["ok"] and report.outcome == "passed"


_markers: dict[str, tuple[int, str]] = {}


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("criterion")
        if m is not None:
            _markers[item.nodeid] = tuple(m.args)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        row = _criteria[number]
        status = "PASS" if row["ok"] else "FAIL"
        terminalreporter.write_line(f"criterion {number}: {status}  {row['title']}")


@pytest.fixture(scope="session")
def random_suite():
    """The 1000 seeded random connected closed braids shared by the suites."""
    from plumbing_bounds.suites import random_braids

    return random_braids(1000, seed=7)
