import pytest

from quickwp import ExactMatrix, GeneratorSystem

U = [[1, 1], [0, 1]]
SANOV = [[[1, 2], [0, 1]], [[1, 0], [2, 1]]]
ROT = [[0, -1], [1, 0]]  # order 4
HEIS = [[[1, 1, 0], [0, 1, 0], [0, 0, 1]], [[1, 0, 0], [0, 1, 1], [0, 0, 1]]]


def schoolbook(a, b):
    """Reference product of nested-list matrices."""
    n = len(a)
    return [[sum(a[i][t] * b[t][j] for t in range(n)) for j in range(n)] for i in range(n)]


@pytest.fixture
def u_sys():
    return GeneratorSystem.from_matrices([U])


@pytest.fixture
def sanov():
    return GeneratorSystem.from_matrices(SANOV)


@pytest.fixture
def rot_sys():
    return GeneratorSystem.from_matrices([ROT])


@pytest.fixture
def heis():
    return GeneratorSystem.from_matrices(HEIS)


@pytest.fixture
def all_systems():
    return {
        "U": GeneratorSystem.from_matrices([U]),
        "sanov": GeneratorSystem.from_matrices(SANOV),
        "rot": GeneratorSystem.from_matrices([ROT]),
        "heis": GeneratorSystem.from_matrices(HEIS),
    }


def M(rows):
    return ExactMatrix.from_rows(rows)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
