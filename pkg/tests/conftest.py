import numpy as np
import pytest

from smallworld.modules.graph import Graph
from smallworld.modules.settings_manager import SettingsManager

from oracles import complete_graph


@pytest.fixture(autouse=True)
def reset_settings():
    SettingsManager.clear_all_settings()
    yield
    SettingsManager.clear_all_settings()

@pytest.fixture
def rng():
    return np.random.default_rng(20240917)

@pytest.fixture
def two_node():
    return Graph.from_edges(2, [(0, 1)])

@pytest.fixture
def path4():
    """0 - 1 - 2 - 3 with implicit loops, degrees (2, 3, 3, 2)"""
    return Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])

@pytest.fixture
def star4():
    """Center 0 joined to 1, 2, 3, degrees (4, 2, 2, 2)"""
    return Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])

@pytest.fixture
def bridged_cliques():
    """Two 5-cliques {0..4} and {5..9} joined by the bridge (4, 5)"""
    edges = [(u, v) for block in (range(5), range(5, 10))
             for u in block for v in block if u < v]
    return Graph.from_edges(10, edges + [(4, 5)])

@pytest.fixture
def k5():
    return complete_graph(5)
