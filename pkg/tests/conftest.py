import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

_CRITERIA: dict[str, tuple[bool, str]] = {}


@pytest.fixture
def criterion():
    """Record one acceptance criterion's outcome for the end-of-run table."""

    def record(name: str, ok: bool, detail: str = "") -> None:
        _CRITERIA[name] = (ok, detail)

    return record


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_CRITERIA, key=lambda s: int(s.split()[0])):
        ok, detail = _CRITERIA[name]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")
