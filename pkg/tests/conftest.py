import mpmath
import pytest
from hypothesis import settings

settings.register_profile("fast", max_examples=60, deadline=None)
settings.load_profile("fast")

mpmath.mp.dps = 80

_CRITERIA_KEY = pytest.StashKey[dict]()


def pytest_configure(config):
    config.stash[_CRITERIA_KEY] = {}


@pytest.fixture
def criterion(request):
    """Record one acceptance line: call with (number, title, passed, detail)."""
    table = request.config.stash[_CRITERIA_KEY]

    def record(number: int, title: str, passed: bool, detail: str) -> None:
        table[number] = (title, passed, detail)

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    table = config.stash.get(_CRITERIA_KEY, {})
    if not table:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(table):
        title, passed, detail = table[n]
        terminalreporter.write_line(f"[{'PASS' if passed else 'FAIL'}] {n:2d}. {title}: {detail}")
