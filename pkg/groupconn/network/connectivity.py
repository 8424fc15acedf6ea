# -*- coding: utf-8 -*-
"""
Edge connectivity and vertex connectivity.

The exact values come from unit-capacity max-flow (Edmonds-Karp augmenting
paths on networkx auxiliary networks). The brute-force oracles enumerate
bipartitions and vertex subsets and share no code with the flow path beyond
the connectedness test; they exist to cross-check it on small graphs.

Conventions: a graph with one vertex or a disconnected graph has
kappa = kappa' = 0; the complete graph K_n has kappa = n - 1.
"""
import logging
import itertools
from contextlib import contextmanager
from dataclasses import dataclass

import numpy as np
from networkx.algorithms.connectivity import (build_auxiliary_edge_connectivity,
                                              build_auxiliary_node_connectivity)
from networkx.algorithms.flow import build_residual_network, edmonds_karp

from ..errors import TooLargeForOracleError
from .graph_core import induced_subgraph, is_complete, is_connected

logger = logging.getLogger(__name__)

EDGE_ORACLE_MAX_N = 20
VERTEX_ORACLE_MAX_N = 12
_ORACLE_CHUNK = 1 << 15


@dataclass(frozen=True)
class ConnectivityValues:
    kappa_edge: int
    kappa_vertex: int
    min_degree: int

    @property
    def whitney_holds(self):
        return self.kappa_vertex <= self.kappa_edge <= self.min_degree


#%% --------------------------------------------------------------------------------------------------------------------
# FLOW NETWORKS
# ----------------------------------------------------------------------------------------------------------------------
class UnitFlowNetwork:
    """
        Auxiliary unit-capacity flow network of a SimpleGraph with one residual
        network reused by every max-flow call.

        With split_vertices=False each undirected edge becomes two arcs of
        capacity 1 and max-flow(s, t) is the local edge connectivity. With
        split_vertices=True every vertex v becomes vA -> vB with capacity 1
        and max-flow(sB, tA) is the local vertex connectivity of the
        non-adjacent pair s, t.
    """

    def __init__(self, graph, split_vertices=False):
        G = graph.to_networkx()
        self.split_vertices = split_vertices
        if split_vertices:
            self.auxiliary = build_auxiliary_node_connectivity(G)
            self.mapping = self.auxiliary.graph['mapping']
        else:
            self.auxiliary = build_auxiliary_edge_connectivity(G)
        self.residual = build_residual_network(self.auxiliary, 'capacity')

    def _terminals(self, s, t):
        if self.split_vertices:
            return f'{self.mapping[s]}B', f'{self.mapping[t]}A'
        return s, t

    def _arcs(self, u, v):
        if self.split_vertices:
            return [(f'{self.mapping[u]}B', f'{self.mapping[v]}A'),
                    (f'{self.mapping[v]}B', f'{self.mapping[u]}A')]
        return [(u, v), (v, u)]

    def max_flow(self, s, t, cutoff=None):
        source, sink = self._terminals(s, t)
        R = edmonds_karp(self.auxiliary, source, sink, residual=self.residual, cutoff=cutoff)
        return int(R.graph['flow_value'])

    @contextmanager
    def without_edge(self, u, v):
        """Temporarily gives the arcs of edge {u, v} zero capacity."""
        arcs = self._arcs(u, v)
        saved = [self.residual[a][b]['capacity'] for a, b in arcs]
        for a, b in arcs:
            self.residual[a][b]['capacity'] = 0
        try:
            yield self
        finally:
            for (a, b), capacity in zip(arcs, saved):
                self.residual[a][b]['capacity'] = capacity


#%% --------------------------------------------------------------------------------------------------------------------
# EXACT CONNECTIVITY
# ----------------------------------------------------------------------------------------------------------------------
def edge_connectivity(graph, network=None):
    """
        Global edge connectivity: the minimum over t != 0 of the unit-capacity
        max-flow from vertex 0 to t. Each flow stops at the best value found
        so far, which starts at the minimum degree.
    """
    n = graph.n
    if n <= 1 or not is_connected(graph): return 0

    if network is None: network = UnitFlowNetwork(graph)

    best = int(graph.degrees.min())
    for t in range(1, n):
        best = min(best, network.max_flow(0, t, cutoff=best))

    logger.debug(f'edge connectivity of {graph!r}: {best}')
    return best


def vertex_connectivity(graph, network=None):
    """
        Global vertex connectivity: the minimum over non-adjacent pairs (i, j)
        of the vertex-split max-flow, scanned in lexicographic order.

        Every minimum separator misses one of the vertices 0..kappa, and that
        vertex is separated from some later or earlier vertex, so the scan
        stops once i exceeds the best value found.
    """
    n = graph.n
    if n <= 1: return 0
    if is_complete(graph): return n - 1
    if not is_connected(graph): return 0

    if network is None: network = UnitFlowNetwork(graph, split_vertices=True)

    adj = graph.adjacency
    best = int(graph.degrees.min())
    for i in range(n):
        if i > best: break
        for j in range(i + 1, n):
            if adj[i, j]: continue
            best = min(best, network.max_flow(i, j, cutoff=best))

    logger.debug(f'vertex connectivity of {graph!r}: {best}')
    return best


def connectivity_values(graph):
    return ConnectivityValues(kappa_edge=edge_connectivity(graph),
                              kappa_vertex=vertex_connectivity(graph),
                              min_degree=int(graph.degrees.min()))


#%% --------------------------------------------------------------------------------------------------------------------
# BRUTE-FORCE ORACLES
# ----------------------------------------------------------------------------------------------------------------------
def edge_connectivity_oracle(graph):
    """
        Minimum number of crossing edges over all 2^(n-1) - 1 proper
        bipartitions (vertex 0 fixed on one side).
    """
    n = graph.n
    if n > EDGE_ORACLE_MAX_N:
        raise TooLargeForOracleError(n, EDGE_ORACLE_MAX_N, 'edge connectivity')
    if n <= 1: return 0

    edges = np.array(graph.edge_list, dtype=np.int64).reshape(-1, 2)
    if len(edges) == 0: return 0

    shifts = np.arange(n - 1, dtype=np.int64)
    best = len(edges)
    for start in range(1, 1 << (n - 1), _ORACLE_CHUNK):
        masks = np.arange(start, min(start + _ORACLE_CHUNK, 1 << (n - 1)), dtype=np.int64)
        side = np.zeros((len(masks), n), dtype=bool)
        side[:, 1:] = (masks[:, np.newaxis] >> shifts) & 1
        crossing = (side[:, edges[:, 0]] != side[:, edges[:, 1]]).sum(axis=1)
        best = min(best, int(crossing.min()))

    return best


def vertex_connectivity_oracle(graph):
    """
        Smallest |S| such that removing S leaves a disconnected graph or a
        single vertex, searched by increasing size.
    """
    n = graph.n
    if n > VERTEX_ORACLE_MAX_N:
        raise TooLargeForOracleError(n, VERTEX_ORACLE_MAX_N, 'vertex connectivity')

    for size in range(n):
        for removed in itertools.combinations(range(n), size):
            rest = [v for v in range(n) if v not in removed]
            if len(rest) <= 1 or not is_connected(induced_subgraph(graph, rest)):
                return size

    return n - 1
