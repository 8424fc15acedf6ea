# -*- coding: utf-8 -*-
"""
The four graphs defined on a finite group. Vertex i is element x_i and
adjacency is evaluated on distinct pairs only.

    commuting   x ~ y  iff  xy = yx
    coprime     x ~ y  iff  gcd(o(x), o(y)) = 1
    ordersum    x ~ y  iff  o(x) + o(y) > |G|
    noninverse  x ~ y  iff  y != x^-1
"""
import numpy as np

from ..errors import InvalidParameterError
from .graph_core import from_adjacency

GRAPH_KINDS = ('commuting', 'coprime', 'ordersum', 'noninverse')


def _no_loops(adj):
    np.fill_diagonal(adj, False)
    return adj


def commuting_graph(group):
    t = group.table
    return from_adjacency(_no_loops(t == t.T), kind='commuting')


def coprime_graph(group):
    orders = group.element_order
    return from_adjacency(_no_loops(np.gcd.outer(orders, orders) == 1), kind='coprime')


def order_sum_graph(group):
    orders = group.element_order
    # strict inequality
    return from_adjacency(_no_loops(np.add.outer(orders, orders) > group.order), kind='ordersum')


def non_inverse_graph(group):
    idx = np.arange(group.order)
    adj = idx[np.newaxis, :] != group.inverse[:, np.newaxis]
    return from_adjacency(_no_loops(adj), kind='noninverse')


def build_graph(group, kind):

    if kind == 'commuting':
        graph = commuting_graph(group)

    elif kind == 'coprime':
        graph = coprime_graph(group)

    elif kind == 'ordersum':
        graph = order_sum_graph(group)

    elif kind == 'noninverse':
        graph = non_inverse_graph(group)

    else:
        raise InvalidParameterError(f'unknown graph kind {kind!r}; expected one of {", ".join(GRAPH_KINDS)}')

    return graph
