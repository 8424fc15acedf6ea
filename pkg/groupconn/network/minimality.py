# -*- coding: utf-8 -*-
"""
Minimal edge connectivity and minimal connectivity by per-edge deletion,
and the dominating-vertex criterion for minimal edge connectivity.

A graph is minimally edge connected (minimally connected) when deleting
any single edge lowers kappa' (kappa) by exactly one.

Two sweep methods give identical verdicts:

    'full'   recompute the global value on every G - e
    'local'  for e = {u, v}, value(G - e) = min(value(G), local(G - e; u, v)),
             where local is the u-v edge (vertex) connectivity; one max-flow
             per edge on a network built once for G
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple

from ..errors import InvalidParameterError
from .connectivity import UnitFlowNetwork, edge_connectivity, vertex_connectivity
from .graph_core import delete_edge, dominating_vertices, is_complete, is_connected, is_regular, remove_vertices

logger = logging.getLogger(__name__)

SWEEP_METHODS = ('local', 'full')


@dataclass(frozen=True)
class MinimalityVerdict:
    measure: str
    applicable: bool
    base_value: int
    holds: bool
    violating_edges: Tuple[Tuple[int, int], ...] = ()
    per_edge_values: Optional[Dict[Tuple[int, int], int]] = field(default=None, compare=False)

    def as_dict(self):
        d = {'measure': self.measure,
             'applicable': self.applicable,
             'base_value': self.base_value,
             'holds': self.holds,
             'violating_edges': [list(e) for e in self.violating_edges]}
        if self.per_edge_values is not None:
            d['per_edge_values'] = [[u, v, k] for (u, v), k in self.per_edge_values.items()]
        return d


@dataclass(frozen=True)
class CriterionResult:
    applies: bool
    answer: Optional[bool] = None
    unique_dominating: Optional[bool] = None
    rest_regular: Optional[bool] = None
    dominating_vertices: Tuple[int, ...] = ()


#%% --------------------------------------------------------------------------------------------------------------------
# DELETION SWEEPS
# ----------------------------------------------------------------------------------------------------------------------
def _sweep(graph, measure, method, with_values):
    if method not in SWEEP_METHODS:
        raise InvalidParameterError(f'unknown sweep method {method!r}; expected one of {SWEEP_METHODS}')

    split = measure == 'vertex'
    global_value = vertex_connectivity if split else edge_connectivity

    applicable = graph.n >= 2 and is_connected(graph)
    if not applicable:
        return MinimalityVerdict(measure=measure, applicable=False, base_value=global_value(graph),
                                 holds=False, per_edge_values={} if with_values else None)

    base = global_value(graph)
    network = UnitFlowNetwork(graph, split_vertices=split) if method == 'local' else None

    values = {}
    for u, v in graph.edge_list:
        if method == 'local':
            with network.without_edge(u, v):
                value = min(base, network.max_flow(u, v, cutoff=base))
        else:
            value = global_value(delete_edge(graph, (u, v)))
        values[(u, v)] = value

    violating = tuple(e for e, value in values.items() if value != base - 1)
    logger.debug(f'{measure} sweep of {graph!r}: base {base}, {len(violating)} violating edges')

    return MinimalityVerdict(measure=measure,
                             applicable=True,
                             base_value=base,
                             holds=not violating,
                             violating_edges=violating,
                             per_edge_values=values if with_values else None)


def is_minimally_edge_connected(graph, method='local', with_values=False):
    """
        Edge-deletion sweep with kappa'. Disconnected graphs and graphs on a
        single vertex are not applicable and never hold.

        Returns
        -------
        MinimalityVerdict
            violating_edges lists, in edge order, every edge whose deletion
            does not lower kappa' by exactly one
    """
    return _sweep(graph, 'edge', method, with_values)


def is_minimally_connected(graph, method='local', with_values=False):
    """Same sweep as is_minimally_edge_connected with kappa in place of kappa'."""
    return _sweep(graph, 'vertex', method, with_values)


#%% --------------------------------------------------------------------------------------------------------------------
# DOMINATING-VERTEX CRITERION
# ----------------------------------------------------------------------------------------------------------------------
def dominating_vertex_criterion(graph):
    """
        For a non-complete graph with a dominating vertex x: minimally edge
        connected iff x is the only dominating vertex and G - x is regular.
    """
    dominating = dominating_vertices(graph)
    if is_complete(graph) or not dominating:
        return CriterionResult(applies=False, dominating_vertices=dominating)

    unique = len(dominating) == 1
    rest_regular = is_regular(remove_vertices(graph, [dominating[0]]))

    return CriterionResult(applies=True,
                           answer=unique and rest_regular,
                           unique_dominating=unique,
                           rest_regular=rest_regular,
                           dominating_vertices=dominating)
