# -*- coding: utf-8 -*-
import math

import numpy as np
import pandas as pd
import pytest

from groupconn.errors import EdgeNotPresentError, InvalidParameterError
from groupconn.network.graph_builders import build_graph
from groupconn.network.graph_core import (add_edge, complete_graph, delete_edge, diameter, empty_graph, from_adjacency,
                                          from_edges, from_networkx, get_vertex_properties, induced_subgraph,
                                          is_connected, remove_vertices, shape_profile, to_dot, write_edge_csv)
from groupconn.network.random_graphs import star


def test_complete_shape(k4):
    shape = shape_profile(k4)
    assert shape.is_complete
    assert shape.min_degree == 3
    assert shape.diameter == 1
    assert shape.dominating_vertices == (0, 1, 2, 3)
    assert not shape.is_star


def test_star_shape():
    shape = shape_profile(star(9))
    assert shape.is_star and shape.star_center == 0
    assert shape.min_degree == 1
    assert shape.diameter == 2


def test_cycle_shape(c4):
    shape = shape_profile(c4)
    assert shape.is_regular
    assert shape.min_degree == 2
    assert shape.diameter == 2
    assert shape.dominating_vertices == ()


def test_path_on_two_vertices_is_star_and_complete():
    shape = shape_profile(complete_graph(2))
    assert shape.is_star and shape.is_complete


def test_disconnected_shape():
    shape = shape_profile(empty_graph(3))
    assert not shape.is_connected
    assert math.isinf(shape.diameter)
    assert shape.degree_sequence == (0, 0, 0)


def test_is_connected(path3):
    assert not is_connected(empty_graph(4))
    assert is_connected(path3)
    k5 = complete_graph(5)
    isolated = k5
    for v in range(1, 5):
        isolated = delete_edge(isolated, (0, v))
    assert not is_connected(isolated)
    assert is_connected(complete_graph(1))


def test_delete_edge(path3, c4):
    p3 = delete_edge(complete_graph(3), (0, 2))
    assert p3.edge_list == path3.edge_list

    split = delete_edge(star(4), (0, 3))
    assert not is_connected(split)

    p4 = delete_edge(c4, (3, 0))
    assert p4.edge_list == ((0, 1), (1, 2), (2, 3))
    assert diameter(p4) == 3


def test_delete_missing_edge(path3):
    with pytest.raises(EdgeNotPresentError):
        delete_edge(path3, (0, 2))
    with pytest.raises(KeyError):
        delete_edge(path3, (0, 7))


def test_delete_then_add_restores(k4):
    g = add_edge(delete_edge(k4, (1, 3)), (1, 3))
    assert np.array_equal(g.adjacency, k4.adjacency)
    with pytest.raises(InvalidParameterError):
        add_edge(k4, (1, 3))


def test_edge_list_is_lexicographic():
    g = from_edges(4, [(3, 2), (1, 0), (2, 0)])
    assert g.edge_list == ((0, 1), (0, 2), (2, 3))
    assert g.num_edges == 3
    assert g.degrees.tolist() == [2, 1, 2, 1]


@pytest.mark.parametrize('matrix', [[[1]], [[0, 1], [0, 0]], [[0, 1, 0]]])
def test_from_adjacency_rejects(matrix):
    with pytest.raises(InvalidParameterError):
        from_adjacency(matrix)


def test_induced_subgraph_and_remove_vertices(k4):
    sub = induced_subgraph(k4, [0, 2, 3])
    assert sub.n == 3 and sub.num_edges == 3
    assert remove_vertices(star(5), [0]).num_edges == 0


def test_networkx_round_trip(c4):
    G = c4.to_networkx()
    assert sorted(G.edges()) == [(0, 1), (0, 3), (1, 2), (2, 3)]
    assert from_networkx(G).edge_list == c4.edge_list


#%% --------------------------------------------------------------------------------------------------------------------
# PROPERTY TABLES AND EXPORT
# ----------------------------------------------------------------------------------------------------------------------
def test_vertex_properties(z4):
    graph = build_graph(z4, 'noninverse')
    df = get_vertex_properties(graph, group=z4)
    assert df['degree'].tolist() == [3, 2, 3, 2]
    assert df['dominating'].tolist() == [True, False, True, False]
    assert df['element_order'].tolist() == [1, 4, 2, 4]
    assert df['eccentricity'].tolist() == [1, 2, 1, 2]


def test_vertex_properties_subset(k4):
    df = get_vertex_properties(k4, property_list=['degree'])
    assert list(df.columns) == ['vertex', 'degree']


def test_to_dot_labels_orders(z4):
    source = to_dot(build_graph(z4, 'ordersum'), group=z4, name='ordersum')
    assert source.startswith('strict graph ordersum {')
    assert '(o=4)' in source
    assert '1 -- 3' in source


def test_write_edge_csv(tmp_path, c4):
    path = tmp_path / 'c4.csv'
    write_edge_csv(c4, path)
    df = pd.read_csv(path)
    assert list(df.columns) == ['u', 'v']
    assert len(df) == 4
