"""Shared fixtures: a collector for the acceptance criterion verdicts."""
import pytest

_criterion_lines: list[tuple[int, str]] = []


@pytest.fixture
def criterion_log():
    """Record one pass/fail line per acceptance criterion.

    The lines are echoed in the terminal summary so they stay visible
    even though pytest captures test stdout.
    """

    def record(number: int, passed: bool, detail: str) -> None:
        verdict = "PASS" if passed else "FAIL"
        line = f"CRITERION {number}: {verdict} ({detail})"
        _criterion_lines.append((number, line))
        print(line)

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _criterion_lines:
        return
    terminalreporter.section("acceptance criteria")
    for _, line in sorted(_criterion_lines):
        terminalreporter.write_line(line)
