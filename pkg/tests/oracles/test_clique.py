import random

import networkx as nx
import pytest

from lorentzian.services.gadgets.graphs import GadgetError, Graph
from lorentzian.services.oracles.clique import OracleError, clique_number, max_clique


def test_small_graphs(p3, k3):
    assert max_clique(k3) == [0, 1, 2]
    assert clique_number(p3) == 2
    assert max_clique(Graph.from_edges(0, [])) == []
    assert clique_number(Graph.from_edges(4, [])) == 1


def test_petersen_is_triangle_free(petersen):
    assert clique_number(petersen) == 2


def test_result_is_a_clique():
    rng = random.Random(1)
    for _ in range(20):
        n = rng.randint(1, 12)
        edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.5]
        graph = Graph.from_edges(n, edges)
        clique = max_clique(graph)

        assert graph.is_clique(clique)
        expected = max(len(c) for c in nx.find_cliques(graph.to_networkx()))
        assert len(clique) == expected


def test_limit():
    with pytest.raises(OracleError):
        max_clique(Graph.complete(5), limit=4)


def test_graph_validation():
    with pytest.raises(GadgetError):
        Graph.from_edges(3, [(0, 0)])
    with pytest.raises(GadgetError):
        Graph.from_edges(3, [(0, 3)])
    with pytest.raises(GadgetError):
        Graph.from_edges(3, [(0, 1), (1, 0)])


def test_graph_networkx_round_trip(petersen):
    assert Graph.from_networkx(petersen.to_networkx()) == petersen
    assert petersen.num_edges == 15
    assert petersen.has_edge(5, 0)
