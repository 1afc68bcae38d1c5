"""Collects the acceptance verdicts and prints them after the run."""

from __future__ import annotations

import pytest

_VERDICTS: dict = {}


@pytest.fixture
def verdict(request):
    """Record a one-line PASS/FAIL verdict for an acceptance criterion."""

    def record(number: int, ok: bool, detail: str) -> None:
        line = f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
        _VERDICTS.setdefault(number, []).append(line)

    return record


def pytest_terminal_summary(terminalreporter):
    if not _VERDICTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_VERDICTS):
        for line in _VERDICTS[number]:
            terminalreporter.write_line(line)
