import pytest

from symsearch import Assignment
from symsearch.problems import magic_symmetries

LO_SHU = [[4, 9, 2], [3, 5, 7], [8, 1, 6]]
LO_SHU_DIAG = [[6, 7, 2], [1, 5, 9], [8, 3, 4]]


def flat(grid):
    return [v for row in grid for v in row]


@pytest.fixture
def lo_shu():
    return Assignment.from_values(flat(LO_SHU))


@pytest.fixture
def lo_shu_diag():
    return Assignment.from_values(flat(LO_SHU_DIAG))


@pytest.fixture(scope="session")
def sq():
    return magic_symmetries(3)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
