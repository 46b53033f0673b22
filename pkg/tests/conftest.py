import pytest
from hypothesis import settings

# exact counting on dense 8-9 vertex graphs routinely exceeds the default deadline
settings.register_profile("reconlab", deadline=None)
settings.load_profile("reconlab")

_ACCEPTANCE: dict[str, list[str]] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _ACCEPTANCE.setdefault(report.nodeid, []).append(report.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for nodeid, outcomes in _ACCEPTANCE.items():
        status = "PASS" if all(o == "passed" for o in outcomes) else "FAIL"
        terminalreporter.write_line(f"{status}  {nodeid.split('::', 1)[1]}")


@pytest.fixture
def rng():
    import random

    return random.Random(20261015)
