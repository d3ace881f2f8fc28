import pytest

from arrangements import Line, from_lines

_ACCEPTANCE = {}


def square_with_diagonals():
    return from_lines(
        [Line(1, 0, 1), Line(1, 0, -1), Line(0, 1, 1), Line(0, 1, -1), Line(1, -1, 0), Line(1, 1, 0)]
    )


def b1_arrangement():
    # y=0, y=x, and the three connectors through (1,0)-(3,3), (2,0)-(6,6), (1,0)-(6,6)
    return from_lines([Line(0, 1, 0), Line(1, -1, 0), Line(3, -2, 3), Line(3, -2, 6), Line(6, -5, 6)])


def triangle():
    return from_lines([Line(1, 0, 0), Line(0, 1, 0), Line(1, 1, 1)])


@pytest.fixture
def square():
    return square_with_diagonals()


@pytest.fixture
def b1():
    return b1_arrangement()


@pytest.fixture
def tri():
    return triangle()


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance" in report.nodeid:
        _ACCEPTANCE[report.nodeid.split("::")[-1]] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for name, outcome in sorted(_ACCEPTANCE.items()):
        terminalreporter.write_line(f"{name}: {'PASS' if outcome == 'passed' else 'FAIL'}")
