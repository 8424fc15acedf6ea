# -*- coding: utf-8 -*-
"""
Simple undirected graphs on the vertex set 0..n-1 and their elementary
invariants: degrees, dominating vertices, regularity, connectedness and
diameter. Graphs are immutable; edits return new graphs.
"""
import math
import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Optional, Tuple

import numpy as np
import pandas as pd
import networkx as nx
import graphviz
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import breadth_first_order, shortest_path

from ..errors import EdgeNotPresentError, InvalidParameterError

logger = logging.getLogger(__name__)

INFINITE = math.inf


#%% --------------------------------------------------------------------------------------------------------------------
# GRAPH TYPES
# ----------------------------------------------------------------------------------------------------------------------
@dataclass(frozen=True, eq=False)
class SimpleGraph:
    """
        Loop-free undirected graph stored as a read-only symmetric boolean
        adjacency matrix. kind records which builder produced the graph.
    """
    adjacency: np.ndarray
    kind: Optional[str] = None

    @property
    def n(self):
        return len(self.adjacency)

    @cached_property
    def edge_list(self):
        # argwhere walks the upper triangle row by row, i.e. lexicographically
        return tuple((int(i), int(j)) for i, j in np.argwhere(np.triu(self.adjacency, 1)))

    @cached_property
    def degrees(self):
        return _readonly(self.adjacency.sum(axis=1).astype(np.int64))

    @property
    def num_edges(self):
        return len(self.edge_list)

    def has_edge(self, u, v):
        return 0 <= u < self.n and 0 <= v < self.n and bool(self.adjacency[u, v])

    def neighbors(self, v):
        return np.flatnonzero(self.adjacency[v])

    def to_networkx(self):
        G = nx.Graph()
        G.add_nodes_from(range(self.n))
        G.add_edges_from(self.edge_list)
        return G

    def __repr__(self):
        return f'SimpleGraph(n={self.n}, edges={self.num_edges}, kind={self.kind!r})'


@dataclass(frozen=True)
class GraphShape:
    min_degree: int
    max_degree: int
    is_regular: bool
    is_complete: bool
    is_star: bool
    star_center: Optional[int]
    dominating_vertices: Tuple[int, ...]
    is_connected: bool
    diameter: float
    degree_sequence: Tuple[int, ...]


def _readonly(a):
    a.setflags(write=False)
    return a


#%% --------------------------------------------------------------------------------------------------------------------
# CONSTRUCTORS
# ----------------------------------------------------------------------------------------------------------------------
def from_adjacency(matrix, kind=None):
    adj = np.array(matrix, dtype=bool)
    if adj.ndim != 2 or adj.shape[0] != adj.shape[1] or adj.shape[0] == 0:
        raise InvalidParameterError(f'adjacency must be a non-empty square matrix, got shape {adj.shape}')
    if np.any(np.diag(adj)):
        raise InvalidParameterError('simple graphs have no loops')
    if not np.array_equal(adj, adj.T):
        raise InvalidParameterError('adjacency must be symmetric')
    return SimpleGraph(adjacency=_readonly(adj), kind=kind)


def from_edges(n, edges, kind=None):
    adj = np.zeros((n, n), dtype=bool)
    for u, v in edges:
        if u == v:
            raise InvalidParameterError(f'loop at vertex {u}')
        adj[u, v] = adj[v, u] = True
    return from_adjacency(adj, kind=kind)


def from_networkx(G, kind=None):
    nodes = sorted(G.nodes())
    index = {v: i for i, v in enumerate(nodes)}
    return from_edges(len(nodes), [(index[u], index[v]) for u, v in G.edges() if u != v], kind=kind)


def empty_graph(n, kind=None):
    return from_adjacency(np.zeros((n, n), dtype=bool), kind=kind)


def complete_graph(n, kind=None):
    return from_adjacency(~np.eye(n, dtype=bool), kind=kind)


#%% --------------------------------------------------------------------------------------------------------------------
# EDITS
# ----------------------------------------------------------------------------------------------------------------------
def delete_edge(graph, edge):
    u, v = edge
    if not graph.has_edge(u, v):
        raise EdgeNotPresentError(edge)
    adj = graph.adjacency.copy()
    adj[u, v] = adj[v, u] = False
    return SimpleGraph(adjacency=_readonly(adj), kind=graph.kind)


def add_edge(graph, edge):
    u, v = edge
    if u == v or not (0 <= u < graph.n and 0 <= v < graph.n):
        raise InvalidParameterError(f'cannot add edge {tuple(edge)} to a graph on {graph.n} vertices')
    if graph.adjacency[u, v]:
        raise InvalidParameterError(f'edge {tuple(edge)} is already present')
    adj = graph.adjacency.copy()
    adj[u, v] = adj[v, u] = True
    return SimpleGraph(adjacency=_readonly(adj), kind=graph.kind)


def induced_subgraph(graph, vertices):
    keep = np.unique(np.asarray(list(vertices), dtype=np.int64))
    return SimpleGraph(adjacency=_readonly(graph.adjacency[np.ix_(keep, keep)].copy()), kind=graph.kind)


def remove_vertices(graph, vertices):
    drop = set(int(v) for v in vertices)
    return induced_subgraph(graph, [v for v in range(graph.n) if v not in drop])


#%% --------------------------------------------------------------------------------------------------------------------
# INVARIANTS
# ----------------------------------------------------------------------------------------------------------------------
def is_connected(graph):
    if graph.n <= 1: return True
    reached = breadth_first_order(csr_matrix(graph.adjacency), 0, directed=False,
                                  return_predecessors=False)
    return len(reached) == graph.n


def distance_matrix(graph):
    return shortest_path(csr_matrix(graph.adjacency), directed=False, unweighted=True)


def diameter(graph):
    if graph.n <= 1: return 0
    d = distance_matrix(graph).max()
    return INFINITE if np.isinf(d) else int(d)


def dominating_vertices(graph):
    return tuple(int(v) for v in np.flatnonzero(graph.degrees == graph.n - 1))


def is_regular(graph):
    return bool(np.all(graph.degrees == graph.degrees[0]))


def is_complete(graph):
    return graph.num_edges == graph.n * (graph.n - 1) // 2


def is_tree(graph):
    return graph.num_edges == graph.n - 1 and is_connected(graph)


def star_center(graph):
    """Center of a star K_{1,n-1} (n >= 2), None if the graph is not a star."""
    if graph.n < 2 or graph.num_edges != graph.n - 1: return None
    centers = dominating_vertices(graph)
    return centers[0] if centers else None


def shape_profile(graph):
    degrees = graph.degrees
    center = star_center(graph)
    connected = is_connected(graph)

    return GraphShape(min_degree=int(degrees.min()),
                      max_degree=int(degrees.max()),
                      is_regular=is_regular(graph),
                      is_complete=is_complete(graph),
                      is_star=center is not None,
                      star_center=center,
                      dominating_vertices=dominating_vertices(graph),
                      is_connected=connected,
                      diameter=diameter(graph) if connected else INFINITE,
                      degree_sequence=tuple(int(d) for d in np.sort(degrees)[::-1]),
                      )


def get_vertex_properties(graph, group=None, property_list=None):
    """
        Per-vertex table of the properties named in property_list.
    """
    def get_default_property_list():
        return ['degree',
                'dominating',
                'eccentricity',
                'element_order',
                ]
    if property_list is None: property_list = get_default_property_list()

    columns = {'vertex': np.arange(graph.n)}

    if 'degree' in property_list:
        columns['degree'] = graph.degrees

    if 'dominating' in property_list:
        columns['dominating'] = graph.degrees == graph.n - 1

    if 'eccentricity' in property_list:
        columns['eccentricity'] = distance_matrix(graph).max(axis=1)

    if 'element_order' in property_list and group is not None:
        columns['element_order'] = group.element_order

    return pd.DataFrame(columns)


#%% --------------------------------------------------------------------------------------------------------------------
# EXPORT
# ----------------------------------------------------------------------------------------------------------------------
def to_dot(graph, group=None, name=None):
    dot = graphviz.Graph(name=name or graph.kind or 'G', strict=True)
    for v in range(graph.n):
        label = str(v) if group is None else f'{v} (o={int(group.element_order[v])})'
        dot.node(str(v), label=label)
    for u, v in graph.edge_list:
        dot.edge(str(u), str(v))
    return dot.source


def write_dot(graph, path, group=None, name=None):
    with open(path, 'w') as f:
        f.write(to_dot(graph, group=group, name=name))


def write_edge_csv(graph, path):
    df = pd.DataFrame(list(graph.edge_list), columns=['u', 'v'])
    df.to_csv(path, index=False)
