from pathlib import Path

import pytest

from elpwv import parse_program

DATA = Path(__file__).parent / "data"

# filled in by test_acceptance; printed once at the end of the session
ACCEPTANCE: dict[str, str] = {}


@pytest.fixture
def data():
    return DATA


@pytest.fixture
def scholarship():
    return parse_program((DATA / "scholarship.lp").read_text())


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE, key=lambda k: int(k.split()[0])):
        terminalreporter.write_line(ACCEPTANCE[key])
