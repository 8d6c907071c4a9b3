import json
from pathlib import Path

import pytest

GOLDEN = Path(__file__).resolve().parents[1] / "src" / "oddquant" / "golden"


@pytest.fixture
def golden() -> Path:
    return GOLDEN


@pytest.fixture
def expected_characters() -> dict:
    return json.loads((GOLDEN / "expected.json").read_text())


ACCEPTANCE_LINES: list = []


@pytest.fixture
def acceptance():
    def record(number: int, title: str, ok: bool, detail: str = "") -> bool:
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}" + (f" ({detail})" if detail and not ok else "")
        ACCEPTANCE_LINES.append(line)
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
