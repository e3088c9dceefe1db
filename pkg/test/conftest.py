"""
Shared fixtures for the test modules.
"""

import pytest

from FPT_Triangles import generators
from test.helpers import graph_of


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: scaling checks on graphs with 10^5 vertices")


@pytest.fixture
def k3():
    return graph_of("0 1\n1 2\n0 2\n")


@pytest.fixture
def k4():
    return generators.complete(4)


@pytest.fixture
def p4():
    return generators.path(4)


@pytest.fixture
def c5():
    return generators.cycle(5)


@pytest.fixture
def c6():
    return generators.cycle(6)


@pytest.fixture
def wheel5():
    return generators.wheel(5)


@pytest.fixture
def edge_file(tmp_path):
    """
    Writes an edge-list text to a file and returns its path.
    """

    def write(text, name="graph.edges"):
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return path

    return write
