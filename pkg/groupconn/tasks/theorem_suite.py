# -*- coding: utf-8 -*-
"""
Evaluation of the claim registry over a corpus of groups, together with the
sanity invariants that every graph and group must satisfy.

A claim verdict that disagrees with its claim is a finding about the claim.
A failing sanity invariant is a bug in this package.
"""
import sys
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

import numpy as np
import pandas as pd
import networkx as nx

from ..errors import CorpusBuildError, GroupConnError
from ..groups.families import Cyclic, Dicyclic, Dihedral, DirectProduct, ElementaryAbelian, Symmetric, build_family
from ..groups.group_core import center, check_order_cap, class_equation_holds, get_default_order_cap, profile
from ..info import __version__
from ..network.connectivity import (EDGE_ORACLE_MAX_N, VERTEX_ORACLE_MAX_N, edge_connectivity_oracle,
                                    vertex_connectivity_oracle)
from ..network.graph_builders import GRAPH_KINDS
from ..network.minimality import is_minimally_connected, is_minimally_edge_connected
from .claims import GraphAnalysis, GroupAnalysis, LogicalForm, get_claim

logger = logging.getLogger(__name__)

DEFAULT_ORACLE_MAX_N = 12


@dataclass(frozen=True)
class ClaimVerdict:
    claim: str
    group_label: str
    graph_kind: Optional[str]
    lhs: Optional[bool]
    rhs: Optional[bool]
    consistent: Optional[bool]
    skipped: Optional[str] = None
    details: Dict[str, Any] = field(default_factory=dict, compare=False)

    def as_dict(self):
        return {'claim': self.claim,
                'group': self.group_label,
                'graph_kind': self.graph_kind,
                'lhs': self.lhs,
                'rhs': self.rhs,
                'consistent': self.consistent,
                'skipped': self.skipped,
                'details': self.details}


@dataclass(frozen=True)
class InvariantCheck:
    id: str
    passed: Optional[bool]
    evidence: str = ''

    @property
    def skipped(self):
        return self.passed is None


@dataclass
class CorpusReport:
    config: Dict[str, Any]
    corpus: List[str]
    claims: List[str]
    verdicts: List[ClaimVerdict]
    invariants: List[Dict[str, Any]]

    @property
    def inconsistent(self):
        return [v for v in self.verdicts if v.consistent is False]

    @property
    def invariant_failures(self):
        return [row for row in self.invariants if row['passed'] is False]

    def tallies(self):
        return tally_verdicts(self.verdicts, self.claims)

    def invariant_summary(self):
        summary = {}
        for row in self.invariants:
            counts = summary.setdefault(row['id'], {'passed': 0, 'failed': 0, 'skipped': 0})
            if row['passed'] is None: counts['skipped'] += 1
            elif row['passed']: counts['passed'] += 1
            else: counts['failed'] += 1
        return summary


#%% --------------------------------------------------------------------------------------------------------------------
# CLAIM EVALUATION
# ----------------------------------------------------------------------------------------------------------------------
def _consistent(form, lhs, rhs):
    if form == LogicalForm.IFF: return lhs == rhs
    if form == LogicalForm.IMPLIES: return lhs or not rhs
    return lhs


def _details(claim, ga, g):
    details = dict(ga.summary())
    if claim.uses_sweep in ('edge', 'both'):
        details['edge_violations'] = [list(e) for e in ga.edge_verdict.violating_edges]
    if claim.uses_sweep in ('vertex', 'both'):
        details['vertex_violations'] = [list(e) for e in ga.vertex_verdict.violating_edges]
    if claim.id == 'P_DOMINATING_CRITERION' or claim.id == 'S_OS_GENERATORS_DOMINATE':
        details['dominating'] = list(ga.shape.dominating_vertices)
    if claim.id == 'S_C_DOMINATING_EQ_CENTER':
        details['dominating'] = list(ga.shape.dominating_vertices)
        details['center'] = sorted(center(g.group))
    return details


def evaluate_claim(claim, group, kind=None, analysis=None, order_cap=None):
    """
        Evaluates one claim on one group.

        Parameters
        ----------
        claim : ClaimId or str
        group : FiniteGroup
        kind : str, optional
            graph kind; required for claims about graphs in general, which are
            evaluated on each of the four graphs separately
        analysis : GroupAnalysis, optional
            cache shared between claims on the same group
        order_cap : int, optional

        Returns
        -------
        ClaimVerdict
    """
    claim = get_claim(claim)
    check_order_cap(group.order, order_cap, what=group.label)

    if analysis is None: analysis = GroupAnalysis(group)

    if claim.pure_graph:
        if kind is None:
            raise GroupConnError(f'{claim.id} is evaluated per graph kind; pass one of {GRAPH_KINDS}')
    elif kind is not None and kind != claim.kind:
        raise GroupConnError(f'{claim.id} is a claim about the {claim.kind} graph, not {kind}')
    kind = kind or claim.kind

    ga = analysis.graph(kind)
    if claim.scope is not None and not claim.scope(ga, analysis):
        return ClaimVerdict(claim=str(claim.id), group_label=group.label, graph_kind=kind,
                            lhs=None, rhs=None, consistent=None, skipped=claim.scope_note,
                            details={})

    lhs = bool(claim.lhs(ga, analysis))
    rhs = bool(claim.rhs(ga, analysis))

    return ClaimVerdict(claim=str(claim.id),
                        group_label=group.label,
                        graph_kind=kind,
                        lhs=lhs,
                        rhs=rhs,
                        consistent=bool(_consistent(claim.form, lhs, rhs)),
                        details=_details(claim, ga, analysis))


def claim_verdicts(claim, group, analysis=None, order_cap=None):
    """All verdicts of a claim on a group: one per graph kind in its scope."""
    claim = get_claim(claim)
    if analysis is None: analysis = GroupAnalysis(group)
    return [evaluate_claim(claim.id, group, kind=kind, analysis=analysis, order_cap=order_cap)
            for kind in claim.kinds]


def tally_verdicts(verdicts, claims):
    columns = ['evaluated', 'consistent', 'inconsistent', 'skipped']
    rows = pd.DataFrame([{'claim': v.claim,
                          'evaluated': v.skipped is None,
                          'consistent': v.consistent is True,
                          'inconsistent': v.consistent is False,
                          'skipped': v.skipped is not None} for v in verdicts],
                        columns=['claim'] + columns)

    tallies = rows.groupby('claim', sort=False)[columns].sum()
    tallies = tallies.reindex([str(c) for c in claims], fill_value=0).astype(int)
    tallies.index.name = 'claim'
    return tallies


#%% --------------------------------------------------------------------------------------------------------------------
# SANITY INVARIANTS
# ----------------------------------------------------------------------------------------------------------------------
def sanity_invariants(graph, oracle_max_n=DEFAULT_ORACLE_MAX_N, method='local', analysis=None):
    """
        Checks that hold for every simple graph.

        WHITNEY always; DIAM2 when the diameter is at most 2; flow against the
        brute-force oracles and the local sweep against the full sweep when
        n <= oracle_max_n (and within the oracle guards); SWEEP_BOUNDS on the
        per-edge values of both sweeps.

        Returns
        -------
        list of InvariantCheck
            passed is None for checks that do not apply
    """
    ga = analysis if analysis is not None else GraphAnalysis(graph, method=method)
    n = graph.n
    shape = ga.shape
    k, k_edge, delta = ga.kappa_vertex, ga.kappa_edge, shape.min_degree

    checks = [InvariantCheck('WHITNEY', k <= k_edge <= delta, f'{k} <= {k_edge} <= {delta}')]

    if shape.diameter <= 2:
        checks.append(InvariantCheck('DIAM2', k_edge == delta,
                                     f'diameter {shape.diameter}: kappa_edge {k_edge}, delta {delta}'))
    else:
        reason = 'disconnected' if not shape.is_connected else f'diameter {shape.diameter}'
        checks.append(InvariantCheck('DIAM2', None, reason))

    checks.append(InvariantCheck('DEGREE_SUM', int(graph.degrees.sum()) == 2 * graph.num_edges,
                                 f'{int(graph.degrees.sum())} = 2 * {graph.num_edges}'))

    if shape.dominating_vertices and n >= 2:
        checks.append(InvariantCheck('DOMINATING_DIAMETER', shape.diameter <= 2,
                                     f'diameter {shape.diameter}'))

    for verdict in (ga.edge_verdict, ga.vertex_verdict):
        values = verdict.per_edge_values or {}
        bad = [e for e, v in values.items() if v not in (verdict.base_value - 1, verdict.base_value)]
        checks.append(InvariantCheck(f'SWEEP_BOUNDS_{verdict.measure.upper()}',
                                     not bad if verdict.applicable else None,
                                     f'base {verdict.base_value}, out-of-range edges {bad}'))

    if n <= min(oracle_max_n, EDGE_ORACLE_MAX_N):
        oracle = edge_connectivity_oracle(graph)
        checks.append(InvariantCheck('ORACLE_EDGE', oracle == k_edge, f'flow {k_edge}, oracle {oracle}'))
    else:
        checks.append(InvariantCheck('ORACLE_EDGE', None, f'n = {n} above oracle bound'))

    if n <= min(oracle_max_n, VERTEX_ORACLE_MAX_N):
        oracle = vertex_connectivity_oracle(graph)
        checks.append(InvariantCheck('ORACLE_VERTEX', oracle == k, f'flow {k}, oracle {oracle}'))
    else:
        if n <= oracle_max_n:
            logger.warning(f'vertex oracle skipped on {graph!r}: limited to {VERTEX_ORACLE_MAX_N} vertices')
        checks.append(InvariantCheck('ORACLE_VERTEX', None, f'n = {n} above oracle bound'))

    if n <= oracle_max_n:
        for sweep, verdict in ((is_minimally_edge_connected, ga.edge_verdict),
                               (is_minimally_connected, ga.vertex_verdict)):
            other_method = 'full' if ga.method == 'local' else 'local'
            other = sweep(graph, method=other_method, with_values=True)
            agree = (other.holds == verdict.holds and other.per_edge_values == verdict.per_edge_values)
            checks.append(InvariantCheck(f'SWEEP_METHODS_{verdict.measure.upper()}', agree,
                                         f'{ga.method}: {verdict.holds}, {other_method}: {other.holds}'))

    return checks


def group_invariants(group, group_profile=None):
    """Checks that hold for every finite group."""
    p = group_profile if group_profile is not None else profile(group)
    n = group.order
    orders = group.element_order

    eq = class_equation_holds(group)
    involution_parity = (p.count_order_two % 2 == 1) if n % 2 == 0 else (p.count_order_two == 0)
    chain = ((not p.is_prime_order or p.is_prime_power_order)
             and (p.is_prime_power_order == p.is_p_group)
             and (not p.is_p_group or p.is_eppo))

    return [InvariantCheck('LAGRANGE', bool(np.all(n % orders == 0)), f'orders {sorted(set(orders.tolist()))}'),
            InvariantCheck('ABELIAN_IFF_CENTER', p.is_abelian == (p.center_size == n),
                           f'center size {p.center_size} of {n}'),
            InvariantCheck('CLASS_EQUATION', eq.holds, str(eq)),
            InvariantCheck('INVOLUTION_PARITY', involution_parity, f'{p.count_order_two} elements of order 2'),
            InvariantCheck('PROFILE_CHAIN', chain,
                           f'prime {p.is_prime_order}, prime power {p.is_prime_power_order}, eppo {p.is_eppo}'),
            ]


#%% --------------------------------------------------------------------------------------------------------------------
# CORPUS
# ----------------------------------------------------------------------------------------------------------------------
def get_default_corpus():
    corpus = [Cyclic(n) for n in range(2, 33)]
    corpus += [Dihedral(n) for n in range(2, 17)]
    corpus += [Dicyclic(n) for n in range(2, 9)]
    corpus += [Symmetric(n) for n in range(3, 5)]
    corpus += [ElementaryAbelian(p, k) for p in (2, 3, 5) for k in range(2, 6) if p ** k <= 32]
    corpus += [DirectProduct([Cyclic(p), Cyclic(q)])
               for p, q in ((2, 3), (2, 5), (2, 7), (3, 5), (2, 11), (3, 7), (2, 13))]
    return corpus


def _config(corpus, claims, order_cap, oracle_max_n, method):
    return {'package': 'groupconn',
            'version': __version__,
            'python': '.'.join(str(x) for x in sys.version_info[:3]),
            'numpy': np.__version__,
            'networkx': nx.__version__,
            'pandas': pd.__version__,
            'order_cap': order_cap,
            'oracle_max_n': oracle_max_n,
            'sweep_method': method,
            'claims': [str(c) for c in claims],
            'corpus_size': len(corpus)}


def run_corpus(corpus, claims, order_cap=None, oracle_max_n=DEFAULT_ORACLE_MAX_N, method='local'):
    """
        Evaluates every claim on every group of the corpus and runs the sanity
        invariants on every group and every derived graph.

        Verdicts are ordered by claim (registry order of `claims`), then by
        group (corpus order), then by graph kind.

        Parameters
        ----------
        corpus : list of family specs
        claims : list of ClaimId or str
        order_cap : int, optional
        oracle_max_n : int
            largest graph checked against the brute-force oracles
        method : {'local', 'full'}
            minimality sweep method

        Returns
        -------
        CorpusReport
    """
    if order_cap is None: order_cap = get_default_order_cap()
    # repeated ids are evaluated once, at their first position
    claims = list(dict.fromkeys(get_claim(c).id for c in claims))

    analyses = []
    for spec in corpus:
        try:
            group = build_family(spec, order_cap=order_cap)
        except GroupConnError as exc:
            raise CorpusBuildError(spec.label, exc)
        analyses.append(GroupAnalysis(group, method=method))

    invariants = []
    for ga in analyses:
        logger.info(f'--------------------------- Group : {ga.label} ------------------------------')

        for check in group_invariants(ga.group, ga.profile):
            invariants.append({'id': check.id, 'group': ga.label, 'graph_kind': None,
                               'passed': check.passed, 'evidence': check.evidence})

        for kind in GRAPH_KINDS:
            for check in sanity_invariants(ga.graph(kind).graph, oracle_max_n=oracle_max_n,
                                           analysis=ga.graph(kind)):
                invariants.append({'id': check.id, 'group': ga.label, 'graph_kind': kind,
                                   'passed': check.passed, 'evidence': check.evidence})

    verdicts = []
    for claim_id in claims:
        for ga in analyses:
            verdicts.extend(claim_verdicts(claim_id, ga.group, analysis=ga, order_cap=order_cap))

    report = CorpusReport(config=_config(corpus, claims, order_cap, oracle_max_n, method),
                          corpus=[spec.label for spec in corpus],
                          claims=[str(c) for c in claims],
                          verdicts=verdicts,
                          invariants=invariants)

    logger.info(f'{len(verdicts)} verdicts, {len(report.inconsistent)} inconsistent')
    for row in report.invariant_failures:
        logger.warning(f"invariant {row['id']} fails on {row['group']} {row['graph_kind'] or ''}: {row['evidence']}")

    return report

