from __future__ import annotations

import pytest

ACCEPTANCE_LINES: list[str] = []


def record_acceptance(num: int, name: str, status: str, detail: str = "") -> None:
    line = f"ACCEPTANCE {num} {name}: {status}"
    if detail:
        line += f" — {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line, flush=True)


@pytest.fixture
def acceptance():
    """Callable for recording one pass/fail line per acceptance criterion."""
    return record_acceptance


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.write_sep("=", "acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
