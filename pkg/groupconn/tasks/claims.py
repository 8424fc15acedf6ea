# -*- coding: utf-8 -*-
"""
Registry of the classification claims about group graphs.

Every claim compares a graph-side flag (lhs, always computed by the
connectivity and minimality modules) with a second flag (rhs, a group
predicate from GroupProfile, or a second graph predicate for claims about
graphs in general) under an explicit logical form:

    IFF       lhs <=> rhs
    IMPLIES   rhs  => lhs   (rhs carries the hypothesis)
    ALWAYS    lhs           (rhs is reported as True)

A claim may also carry a scope; groups or graphs outside it are skipped.
Claims with kind None are evaluated on all four graphs of a group.
"""
import enum
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Optional

from sympy import totient

from ..errors import InvalidParameterError
from ..groups.group_core import center, profile
from ..network.connectivity import edge_connectivity, vertex_connectivity
from ..network.graph_builders import GRAPH_KINDS, build_graph
from ..network.graph_core import is_tree, shape_profile
from ..network.minimality import dominating_vertex_criterion, is_minimally_connected, is_minimally_edge_connected


class ClaimId(str, enum.Enum):
    DIAM2_EDGE_EQ_MINDEG = 'DIAM2_EDGE_EQ_MINDEG'
    WHITNEY = 'WHITNEY'
    L31_COMPLETE_STAR_MINIMAL = 'L31_COMPLETE_STAR_MINIMAL'
    L32_COMMUTING_COMPLETE_IFF_ABELIAN = 'L32_COMMUTING_COMPLETE_IFF_ABELIAN'
    L_CP_COMPLETE_IFF_ORDER_LE_2 = 'L_CP_COMPLETE_IFF_ORDER_LE_2'
    L34_OS_COMPLETE_IFF_PRIME = 'L34_OS_COMPLETE_IFF_PRIME'
    L35_NI_COMPLETE_IFF_SELF_INVERSE = 'L35_NI_COMPLETE_IFF_SELF_INVERSE'
    L_NI_KAPPA_EQ = 'L_NI_KAPPA_EQ'
    P_DOMINATING_CRITERION = 'P_DOMINATING_CRITERION'
    P_OS_NULL_IF_NONCYCLIC = 'P_OS_NULL_IF_NONCYCLIC'
    T_OS_EDGE_IFF_PRIME = 'T_OS_EDGE_IFF_PRIME'
    T_NI_EDGE_IFF_UNIFORM_INVERSE = 'T_NI_EDGE_IFF_UNIFORM_INVERSE'
    T_C_EDGE_IFF_ABELIAN = 'T_C_EDGE_IFF_ABELIAN'
    T_C_VERTEX_IFF_ABELIAN = 'T_C_VERTEX_IFF_ABELIAN'
    T_OS_VERTEX_IFF_PRIME_POWER = 'T_OS_VERTEX_IFF_PRIME_POWER'
    T_NI_VERTEX_IFF_UNIFORM_INVERSE = 'T_NI_VERTEX_IFF_UNIFORM_INVERSE'
    P_CP_FULL_EXP_IFF_P_GROUP = 'P_CP_FULL_EXP_IFF_P_GROUP'
    T_CP_EVEN_NOT_MINIMAL = 'T_CP_EVEN_NOT_MINIMAL'
    T_CP_VERTEX_IFF_P_GROUP = 'T_CP_VERTEX_IFF_P_GROUP'
    X_TREE_CLAIM = 'X_TREE_CLAIM'
    S_C_DOMINATING_EQ_CENTER = 'S_C_DOMINATING_EQ_CENTER'
    S_OS_GENERATORS_DOMINATE = 'S_OS_GENERATORS_DOMINATE'
    X_NI_STAR_CLAIM = 'X_NI_STAR_CLAIM'

    def __str__(self):
        return self.value


class LogicalForm(str, enum.Enum):
    IFF = 'iff'
    IMPLIES = 'implies'
    ALWAYS = 'always'

    def __str__(self):
        return self.value


#%% --------------------------------------------------------------------------------------------------------------------
# ANALYSIS CACHES
# ----------------------------------------------------------------------------------------------------------------------
class GraphAnalysis:
    """Lazily computed invariants of one graph; every value is computed once."""

    def __init__(self, graph, method='local'):
        self.graph = graph
        self.method = method

    @cached_property
    def shape(self):
        return shape_profile(self.graph)

    @cached_property
    def kappa_edge(self):
        return edge_connectivity(self.graph)

    @cached_property
    def kappa_vertex(self):
        return vertex_connectivity(self.graph)

    @cached_property
    def edge_verdict(self):
        return is_minimally_edge_connected(self.graph, method=self.method, with_values=True)

    @cached_property
    def vertex_verdict(self):
        return is_minimally_connected(self.graph, method=self.method, with_values=True)

    @cached_property
    def criterion(self):
        return dominating_vertex_criterion(self.graph)

    @cached_property
    def is_tree(self):
        return is_tree(self.graph)

    def summary(self):
        shape = self.shape
        return {'n': self.graph.n,
                'edges': self.graph.num_edges,
                'min_degree': shape.min_degree,
                'kappa': self.kappa_vertex,
                'kappa_edge': self.kappa_edge,
                'diameter': shape.diameter if shape.diameter != float('inf') else 'inf'}


class GroupAnalysis:

    def __init__(self, group, method='local'):
        self.group = group
        self.method = method
        self._graphs = {}

    @property
    def label(self):
        return self.group.label

    @cached_property
    def profile(self):
        return profile(self.group)

    def graph(self, kind):
        if kind not in self._graphs:
            self._graphs[kind] = GraphAnalysis(build_graph(self.group, kind), method=self.method)
        return self._graphs[kind]


#%% --------------------------------------------------------------------------------------------------------------------
# CLAIM REGISTRY
# ----------------------------------------------------------------------------------------------------------------------
@dataclass(frozen=True)
class Claim:
    id: ClaimId
    statement: str
    form: LogicalForm
    kind: Optional[str]
    lhs: Callable
    rhs: Callable
    scope: Optional[Callable] = None
    scope_note: str = ''
    uses_sweep: Optional[str] = None

    @property
    def pure_graph(self):
        return self.kind is None

    @property
    def kinds(self):
        return GRAPH_KINDS if self.kind is None else (self.kind,)


def _true(ga, g):
    return True


def _uniform_inverse(g):
    p = g.profile
    return p.all_nonidentity_self_inverse or p.no_nonidentity_self_inverse


CLAIMS = [
    Claim(ClaimId.DIAM2_EDGE_EQ_MINDEG,
          "diameter at most 2 implies edge connectivity equals minimum degree",
          LogicalForm.IMPLIES, None,
          lhs=lambda ga, g: ga.kappa_edge == ga.shape.min_degree,
          rhs=lambda ga, g: ga.shape.diameter <= 2),

    Claim(ClaimId.WHITNEY,
          "kappa <= kappa' <= delta for every simple graph",
          LogicalForm.ALWAYS, None,
          lhs=lambda ga, g: ga.kappa_vertex <= ga.kappa_edge <= ga.shape.min_degree,
          rhs=_true),

    Claim(ClaimId.L31_COMPLETE_STAR_MINIMAL,
          "complete graphs and stars are minimally edge connected and minimally connected",
          LogicalForm.IMPLIES, None,
          lhs=lambda ga, g: ga.edge_verdict.holds and ga.vertex_verdict.holds,
          rhs=lambda ga, g: ga.graph.n >= 2 and (ga.shape.is_complete or ga.shape.is_star),
          uses_sweep='both'),

    Claim(ClaimId.L32_COMMUTING_COMPLETE_IFF_ABELIAN,
          "the commuting graph is complete iff G is abelian",
          LogicalForm.IFF, 'commuting',
          lhs=lambda ga, g: ga.shape.is_complete,
          rhs=lambda ga, g: g.profile.is_abelian),

    Claim(ClaimId.L_CP_COMPLETE_IFF_ORDER_LE_2,
          "the co-prime graph is complete iff |G| <= 2",
          LogicalForm.IFF, 'coprime',
          lhs=lambda ga, g: ga.shape.is_complete,
          rhs=lambda ga, g: g.profile.order <= 2),

    Claim(ClaimId.L34_OS_COMPLETE_IFF_PRIME,
          "the order-sum graph is complete iff G is cyclic of prime order",
          LogicalForm.IFF, 'ordersum',
          lhs=lambda ga, g: ga.shape.is_complete,
          rhs=lambda ga, g: g.profile.is_cyclic and g.profile.is_prime_order),

    Claim(ClaimId.L35_NI_COMPLETE_IFF_SELF_INVERSE,
          "the non-inverse graph is complete iff every element is self-inverse",
          LogicalForm.IFF, 'noninverse',
          lhs=lambda ga, g: ga.shape.is_complete,
          rhs=lambda ga, g: g.profile.all_nonidentity_self_inverse),

    Claim(ClaimId.L_NI_KAPPA_EQ,
          "vertex and edge connectivity of the non-inverse graph are equal",
          LogicalForm.ALWAYS, 'noninverse',
          lhs=lambda ga, g: ga.kappa_vertex == ga.kappa_edge,
          rhs=_true),

    Claim(ClaimId.P_DOMINATING_CRITERION,
          "a non-complete graph with a dominating vertex x is minimally edge connected "
          "iff x is the only dominating vertex and G - x is regular",
          LogicalForm.IFF, None,
          lhs=lambda ga, g: ga.edge_verdict.holds,
          rhs=lambda ga, g: ga.criterion.answer,
          scope=lambda ga, g: ga.criterion.applies,
          scope_note='graph is complete or has no dominating vertex',
          uses_sweep='edge'),

    Claim(ClaimId.P_OS_NULL_IF_NONCYCLIC,
          "the order-sum graph of a non-cyclic group is a null graph",
          LogicalForm.IMPLIES, 'ordersum',
          lhs=lambda ga, g: ga.graph.num_edges == 0,
          rhs=lambda ga, g: not g.profile.is_cyclic),

    Claim(ClaimId.T_OS_EDGE_IFF_PRIME,
          "for cyclic G the order-sum graph is minimally edge connected iff |G| is prime",
          LogicalForm.IFF, 'ordersum',
          lhs=lambda ga, g: ga.edge_verdict.holds,
          rhs=lambda ga, g: g.profile.is_prime_order,
          scope=lambda ga, g: g.profile.is_cyclic,
          scope_note='group is not cyclic',
          uses_sweep='edge'),

    Claim(ClaimId.T_NI_EDGE_IFF_UNIFORM_INVERSE,
          "the non-inverse graph is minimally edge connected iff the non-identity elements "
          "are all self-inverse or all not self-inverse",
          LogicalForm.IFF, 'noninverse',
          lhs=lambda ga, g: ga.edge_verdict.holds,
          rhs=lambda ga, g: _uniform_inverse(g),
          uses_sweep='edge'),

    Claim(ClaimId.T_C_EDGE_IFF_ABELIAN,
          "the commuting graph is minimally edge connected iff G is abelian",
          LogicalForm.IFF, 'commuting',
          lhs=lambda ga, g: ga.edge_verdict.holds,
          rhs=lambda ga, g: g.profile.is_abelian,
          uses_sweep='edge'),

    Claim(ClaimId.T_C_VERTEX_IFF_ABELIAN,
          "the commuting graph is minimally connected iff G is abelian",
          LogicalForm.IFF, 'commuting',
          lhs=lambda ga, g: ga.vertex_verdict.holds,
          rhs=lambda ga, g: g.profile.is_abelian,
          uses_sweep='vertex'),

    Claim(ClaimId.T_OS_VERTEX_IFF_PRIME_POWER,
          "the order-sum graph is minimally connected iff |G| is a prime power",
          LogicalForm.IFF, 'ordersum',
          lhs=lambda ga, g: ga.vertex_verdict.holds,
          rhs=lambda ga, g: g.profile.is_prime_power_order,
          uses_sweep='vertex'),

    Claim(ClaimId.T_NI_VERTEX_IFF_UNIFORM_INVERSE,
          "the non-inverse graph is minimally connected iff the non-identity elements "
          "are all self-inverse or all not self-inverse",
          LogicalForm.IFF, 'noninverse',
          lhs=lambda ga, g: ga.vertex_verdict.holds,
          rhs=lambda ga, g: _uniform_inverse(g),
          uses_sweep='vertex'),

    Claim(ClaimId.P_CP_FULL_EXP_IFF_P_GROUP,
          "for G of full exponent the co-prime graph is minimally edge connected iff G is a p-group",
          LogicalForm.IFF, 'coprime',
          lhs=lambda ga, g: ga.edge_verdict.holds,
          rhs=lambda ga, g: g.profile.is_p_group,
          scope=lambda ga, g: g.profile.is_full_exponent,
          scope_note='group is not of full exponent',
          uses_sweep='edge'),

    Claim(ClaimId.T_CP_EVEN_NOT_MINIMAL,
          "for G of even order that is not a p-group the co-prime graph is not minimally edge connected",
          LogicalForm.IMPLIES, 'coprime',
          lhs=lambda ga, g: not ga.edge_verdict.holds,
          rhs=lambda ga, g: g.profile.is_even_order and not g.profile.is_p_group,
          uses_sweep='edge'),

    Claim(ClaimId.T_CP_VERTEX_IFF_P_GROUP,
          "the co-prime graph is minimally connected iff G is a p-group",
          LogicalForm.IFF, 'coprime',
          lhs=lambda ga, g: ga.vertex_verdict.holds,
          rhs=lambda ga, g: g.profile.is_p_group,
          uses_sweep='vertex'),

    Claim(ClaimId.X_TREE_CLAIM,
          "a graph is minimally connected iff it is a tree",
          LogicalForm.IFF, None,
          lhs=lambda ga, g: ga.vertex_verdict.holds,
          rhs=lambda ga, g: ga.is_tree,
          uses_sweep='vertex'),

    Claim(ClaimId.S_C_DOMINATING_EQ_CENTER,
          "the dominating vertices of the commuting graph are exactly the center",
          LogicalForm.ALWAYS, 'commuting',
          lhs=lambda ga, g: set(ga.shape.dominating_vertices) == center(g.group),
          rhs=_true),

    Claim(ClaimId.S_OS_GENERATORS_DOMINATE,
          "for cyclic G of non-prime order the order-sum graph has exactly phi(|G|) dominating vertices",
          LogicalForm.ALWAYS, 'ordersum',
          lhs=lambda ga, g: len(ga.shape.dominating_vertices) == int(totient(g.profile.order)),
          rhs=_true,
          scope=lambda ga, g: g.profile.is_cyclic and not g.profile.is_prime_order,
          scope_note='group is not cyclic of non-prime order'),

    Claim(ClaimId.X_NI_STAR_CLAIM,
          "if no non-identity element is self-inverse the non-inverse graph is a star",
          LogicalForm.IMPLIES, 'noninverse',
          lhs=lambda ga, g: ga.shape.is_star,
          rhs=lambda ga, g: g.profile.no_nonidentity_self_inverse),
]

REGISTRY = {claim.id: claim for claim in CLAIMS}


def get_claim(claim_id):
    try:
        return REGISTRY[ClaimId(str(claim_id).strip())]
    except ValueError:
        raise InvalidParameterError(f'unknown claim {claim_id!r}')


def get_default_claims():
    return [claim.id for claim in CLAIMS]
