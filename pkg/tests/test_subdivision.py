import networkx as nx
import pytest

from cgrank.cube import PointSet
from cgrank.subdivision import (
    contains_clique_subdivision,
    find_clique_subdivision,
    forbidden_graph,
    max_subdivision_order,
)


def test_forbidden_graph_of_weight_threshold():
    S = PointSet.from_predicate(4, lambda bits: sum(bits) >= 3)
    G = forbidden_graph(S)
    assert G.order == 11
    assert len(G.edges) == 16
    assert G.graph.number_of_nodes() == 11


def test_forbidden_graph_of_full_set_is_empty():
    G = forbidden_graph(PointSet.full(3))
    assert G.is_empty()
    assert max_subdivision_order(G) == 0


def test_isolated_vertices_give_order_zero():
    S = PointSet.from_indices(2, [1, 2])
    assert max_subdivision_order(forbidden_graph(S)) == 0


def test_single_edge_gives_order_one():
    S = PointSet.from_indices(2, [2, 3])
    assert max_subdivision_order(forbidden_graph(S)) == 1


def test_square_contains_subdivided_triangle():
    G = forbidden_graph(PointSet.empty(2))
    assert max_subdivision_order(G) == 2


def test_low_weight_layers_contain_k5():
    S = PointSet.from_predicate(4, lambda bits: sum(bits) >= 3)
    G = forbidden_graph(S)
    assert contains_clique_subdivision(G.graph, 5)
    assert max_subdivision_order(G) == 4


def test_subdivision_paths_are_internally_disjoint():
    g = nx.petersen_graph()
    assert not contains_clique_subdivision(g, 5)
    routes = find_clique_subdivision(g, 4)
    assert routes is not None
    assert len(routes) == 6
    branch = {v for pair in routes for v in pair}
    interiors = [set(path[1:-1]) for path in routes.values()]
    seen = set()
    for interior in interiors:
        assert not interior & seen
        assert not interior & branch
        seen |= interior
    for (u, v), path in routes.items():
        assert path[0] == u and path[-1] == v
        assert all(g.has_edge(a, b) for a, b in zip(path, path[1:]))


def test_cycle_has_no_k4():
    g = nx.cycle_graph(6)
    assert contains_clique_subdivision(g, 3)
    assert not contains_clique_subdivision(g, 4)
    with pytest.raises(ValueError):
        find_clique_subdivision(g, 2)
