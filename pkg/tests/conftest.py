import pytest

from corpus import EXAMPLE5, BIPARTITE7
from hiddengraph.probe import AdjacencyOracle


@pytest.fixture
def example5():
    return AdjacencyOracle(5, EXAMPLE5)


@pytest.fixture
def bipartite7():
    return AdjacencyOracle(7, BIPARTITE7)


def pytest_terminal_summary(terminalreporter):
    import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for num in sorted(test_acceptance.RESULTS):
            terminalreporter.write_line(test_acceptance.RESULTS[num])
