import pytest

from sparsemaps.multigraph import MultiGraph

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def k4():
    return MultiGraph.complete(4)


@pytest.fixture
def triangle():
    return MultiGraph.complete(3)


@pytest.fixture
def triangle_plus_isolated():
    return MultiGraph.from_edges(4, [(0, 1), (0, 2), (1, 2)])


@pytest.fixture
def k4_doubled():
    """K_4 with 0-1 and 2-3 doubled: 8 edges on 4 vertices."""
    return MultiGraph.complete(4).with_edges([(0, 1), (2, 3)])
