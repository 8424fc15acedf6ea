# -*- coding: utf-8 -*-
"""
Random and structured test graphs for checking the flow-based connectivity
against the brute-force oracles.
"""
import numpy as np
import networkx as nx

from ..errors import InvalidParameterError
from .graph_core import complete_graph, from_adjacency, from_edges, from_networkx

ER_DENSITIES = (0.2, 0.5, 0.8)


#%% --------------------------------------------------------------------------------------------------------------------
# GENERAL METHODS
# ----------------------------------------------------------------------------------------------------------------------
def construct_graph(type, **kwargs):

    if type == 'erdos_renyi':
        graph = erdos_renyi(**kwargs)

    elif type == 'star':
        graph = star(**kwargs)

    elif type == 'cycle':
        graph = cycle(**kwargs)

    elif type == 'complete':
        graph = complete_graph(**kwargs)

    elif type == 'complete_minus_matching':
        graph = complete_minus_matching(**kwargs)

    else:
        raise InvalidParameterError(f'unknown graph type {type!r}')

    return graph


#%% --------------------------------------------------------------------------------------------------------------------
# GRAPH MODELS
# ----------------------------------------------------------------------------------------------------------------------
def erdos_renyi(n, density=0.5, seed=None):
    G = nx.fast_gnp_random_graph(n, p=density, seed=seed, directed=False)
    return from_networkx(G, kind='erdos_renyi')


def star(n):
    return from_edges(n, [(0, v) for v in range(1, n)], kind='star')


def cycle(n):
    if n < 3:
        return from_edges(n, [(0, 1)] if n == 2 else [], kind='cycle')
    return from_edges(n, [(v, (v + 1) % n) for v in range(n)], kind='cycle')


def complete_minus_matching(n):
    """K_n without the pairs {1, 2}, {3, 4}, ...; vertex 0 and, for even n, the last vertex stay dominating."""
    adj = ~np.eye(n, dtype=bool)
    for v in range(1, n - 1, 2):
        adj[v, v + 1] = adj[v + 1, v] = False
    return from_adjacency(adj, kind='complete_minus_matching')


def oracle_test_graphs(trials, seed, max_n):
    """
        Structured shapes for every n in 1..max_n, followed by `trials`
        Erdos-Renyi graphs whose size, density and seed are drawn from one
        generator seeded with `seed`.
    """
    if max_n < 1:
        raise InvalidParameterError(f'max_n must be at least 1, got {max_n}')

    for n in range(1, max_n + 1):
        for type in ('star', 'cycle', 'complete', 'complete_minus_matching'):
            yield construct_graph(type, n=n)

    rng = np.random.default_rng(seed)
    for _ in range(trials):
        n = int(rng.integers(1, max_n + 1))
        density = float(rng.choice(ER_DENSITIES))
        yield construct_graph('erdos_renyi', n=n, density=density, seed=int(rng.integers(2**31)))
