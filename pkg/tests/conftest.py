"""Shared fixtures. Acceptance verdicts are echoed in the terminal summary."""
import pytest

_VERDICTS: list[str] = []


@pytest.fixture
def criterion():
    """Record one PASS/FAIL line, print it, and fail the test if it did not pass."""

    def record(label: str, ok: bool, detail: str = "") -> None:
        line = f"{'PASS' if ok else 'FAIL'} {label}" + (f": {detail}" if detail else "")
        _VERDICTS.append(line)
        print(line)
        assert ok, line

    return record


@pytest.fixture
def note():
    def record(text: str) -> None:
        _VERDICTS.append(f"INFO {text}")
        print(f"INFO {text}")

    return record


def pytest_terminal_summary(terminalreporter):
    if _VERDICTS:
        terminalreporter.section("acceptance criteria")
        for line in _VERDICTS:
            terminalreporter.write_line(line)
