import pytest

from ahomotopy import cycle_graph, path_graph

FAMILY = {
    **{f"I{n}": path_graph(n) for n in range(4)},
    **{f"C{n}": cycle_graph(n) for n in range(3, 7)},
}


def edges_of(g):
    return sorted(g.edges)


@pytest.fixture
def family():
    return FAMILY


# one line per acceptance criterion, printed after the run
ACCEPTANCE = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(ACCEPTANCE):
        terminalreporter.write_line(line)
