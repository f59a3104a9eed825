import pytest

_LINES: list[tuple[str, bool, str]] = []


@pytest.fixture
def criterion():
    """Record one pass/fail line: ``criterion(name, ok, detail)``."""

    def record(name: str, ok: bool, detail: str = "") -> bool:
        _LINES.append((name, bool(ok), detail))
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if not _LINES:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in sorted(_LINES, key=lambda x: x[0]):
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")
