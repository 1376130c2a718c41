from __future__ import annotations

import pytest

ACCEPTANCE = pytest.StashKey[list]()


def format_line(number: int, title: str, ok: bool, detail: str = "") -> str:
    line = f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {title}"
    return f"{line} [{detail}]" if detail else line


def pytest_configure(config):
    config.stash[ACCEPTANCE] = []


@pytest.fixture
def criterion(request):
    """Run one acceptance criterion and log a pass/fail line for the summary."""
    lines = request.config.stash[ACCEPTANCE]

    def run(number: int, title: str, fn):
        try:
            ok, detail = fn()
        except Exception as exc:
            lines.append((number, format_line(number, title, False, f"{type(exc).__name__}: {exc}")))
            raise
        line = format_line(number, title, ok, detail)
        lines.append((number, line))
        print(line)
        assert ok, line

    return run


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(ACCEPTANCE, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(lines):
            terminalreporter.write_line(line)
