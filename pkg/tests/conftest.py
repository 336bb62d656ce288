import pytest

from tropbasis import BOTTOM as B
from tropbasis import TwoRowSystem

ACCEPTANCE_LINES = []


@pytest.fixture
def ex1():
    # 4 x3 + 2 x4 <= x1 + 2 x2 ;  3 x1 + x3 <= x2
    return TwoRowSystem.from_rows((B, B, 4, 2), (3, B, 0, B), (0, 2, B, B), (B, 0, B, B))


@pytest.fixture
def ex2():
    return TwoRowSystem.from_rows(
        (B, B, B, 0, 4, 2, 6),
        (B, 5, 6, B, B, B, 2),
        (0, 1, 5, B, B, B, B),
        (3, B, B, 0, 2, 4, B),
    )


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
