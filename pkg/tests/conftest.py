import sys
from pathlib import Path

import pytest

HERE = Path(__file__).parent
sys.path.insert(0, str(HERE))

FIXTURES = HERE.parent / "src" / "poincare_git" / "fixtures"
DATA = HERE / "data"
GOLDEN = HERE / "golden"

_acceptance: dict[int, tuple[bool, str, str]] = {}


@pytest.fixture
def acceptance():
    """Record the verdict of one acceptance criterion for the summary."""

    def record(number: int, title: str, passed: bool, detail: str = ""):
        _acceptance[number] = (passed, title, detail)
        return passed

    return record


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_acceptance):
        passed, title, detail = _acceptance[n]
        line = f"[{'PASS' if passed else 'FAIL'}] #{n} {title}"
        terminalreporter.write_line(line + (f": {detail}" if detail else ""))
