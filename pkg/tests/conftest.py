import pytest

_acceptance = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    key = marker.args[0]
    if rep.when == "call" or (rep.when == "setup" and rep.failed):
        _acceptance[key] = _acceptance.get(key, True) and rep.passed


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion label")


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_acceptance, key=lambda k: int(k[2:])):
        terminalreporter.write_line(f"{key}: {'PASS' if _acceptance[key] else 'FAIL'}")
