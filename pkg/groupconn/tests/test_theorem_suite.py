# -*- coding: utf-8 -*-
import pytest

from groupconn.errors import CorpusBuildError, GroupConnError, InvalidParameterError, OrderCapExceededError
from groupconn.groups.families import Cyclic, Dicyclic, Dihedral, ElementaryAbelian, build_family
from groupconn.network.graph_builders import GRAPH_KINDS, build_graph
from groupconn.tasks.claims import CLAIMS, ClaimId, GroupAnalysis, LogicalForm, get_claim, get_default_claims
from groupconn.tasks.theorem_suite import (claim_verdicts, evaluate_claim, get_default_corpus, group_invariants,
                                           run_corpus, sanity_invariants)


def _by_id(checks):
    return {c.id: c for c in checks}


#%% --------------------------------------------------------------------------------------------------------------------
# REGISTRY
# ----------------------------------------------------------------------------------------------------------------------
def test_registry_covers_every_claim_id():
    assert [c.id for c in CLAIMS] == list(ClaimId)
    assert get_default_claims() == list(ClaimId)


def test_get_claim():
    assert get_claim('WHITNEY').form == LogicalForm.ALWAYS
    assert get_claim(ClaimId.T_CP_EVEN_NOT_MINIMAL).form == LogicalForm.IMPLIES
    with pytest.raises(InvalidParameterError):
        get_claim('NOT_A_CLAIM')


def test_pure_graph_claims():
    pure = {str(c.id) for c in CLAIMS if c.pure_graph}
    assert pure == {'DIAM2_EDGE_EQ_MINDEG', 'WHITNEY', 'L31_COMPLETE_STAR_MINIMAL',
                    'P_DOMINATING_CRITERION', 'X_TREE_CLAIM'}
    assert get_claim('WHITNEY').kinds == GRAPH_KINDS


#%% --------------------------------------------------------------------------------------------------------------------
# CLAIM VERDICTS
# ----------------------------------------------------------------------------------------------------------------------
def test_commuting_edge_claim_on_s3(s3):
    v = evaluate_claim(ClaimId.T_C_EDGE_IFF_ABELIAN, s3)
    assert (v.lhs, v.rhs, v.consistent) == (False, False, True)
    assert v.graph_kind == 'commuting'
    assert [1, 2] in v.details['edge_violations']
    assert v.details['edge_violations'] == [[0, 1], [0, 2], [1, 2]]


def test_order_sum_edge_claim_on_z5(z5):
    v = evaluate_claim('T_OS_EDGE_IFF_PRIME', z5)
    assert (v.lhs, v.rhs, v.consistent) == (True, True, True)


def test_order_sum_vertex_claim_on_z4_is_reported_inconsistent(z4):
    v = evaluate_claim('T_OS_VERTEX_IFF_PRIME_POWER', z4)
    assert v.rhs is True
    assert v.lhs is False
    assert v.consistent is False
    assert v.details['vertex_violations'] == [[1, 3]]


def test_scoped_claims_are_skipped(s3, s4, z6):
    v = evaluate_claim('T_OS_EDGE_IFF_PRIME', s3)
    assert v.skipped and v.lhs is None and v.rhs is None and v.consistent is None

    # S_4 has exponent 12 and no element of order 12
    assert evaluate_claim('P_CP_FULL_EXP_IFF_P_GROUP', s4).skipped
    v = evaluate_claim('P_CP_FULL_EXP_IFF_P_GROUP', z6)
    assert (v.lhs, v.rhs, v.consistent) == (False, False, True)


@pytest.mark.parametrize('spec', [Dihedral(3), Dihedral(15), Dicyclic(3)])
def test_cyclic_scoped_claims_skip_non_cyclic_groups(spec):
    group = build_family(spec)
    for claim_id in ('T_OS_EDGE_IFF_PRIME', 'S_OS_GENERATORS_DOMINATE'):
        assert evaluate_claim(claim_id, group).skipped
    v = evaluate_claim('P_OS_NULL_IF_NONCYCLIC', group)
    assert (v.lhs, v.rhs, v.consistent) == (True, True, True)


def test_full_exponent_coprime_claim():
    for spec in (Cyclic(9), Dicyclic(2)):
        v = evaluate_claim('P_CP_FULL_EXP_IFF_P_GROUP', build_family(spec))
        assert (v.lhs, v.rhs, v.consistent) == (True, True, True)


def test_even_order_implication(z6, s3):
    for group in (z6, s3):
        v = evaluate_claim('T_CP_EVEN_NOT_MINIMAL', group)
        assert v.rhs and v.lhs and v.consistent
    v = evaluate_claim('T_CP_EVEN_NOT_MINIMAL', build_family(Cyclic(8)))
    assert v.rhs is False and v.consistent is True


@pytest.mark.parametrize('spec, holds', [(Cyclic(2), True), (Cyclic(3), True), (Cyclic(5), True), (Cyclic(7), True),
                                         (Cyclic(4), False), (Cyclic(6), False)])
def test_order_sum_edge_characteristic_instances(spec, holds):
    v = evaluate_claim('T_OS_EDGE_IFF_PRIME', build_family(spec))
    assert v.lhs is holds and v.consistent


@pytest.mark.parametrize('spec, holds', [(ElementaryAbelian(2, 2), True), (ElementaryAbelian(2, 3), True),
                                         (Cyclic(5), True), (Cyclic(4), False)])
def test_non_inverse_edge_characteristic_instances(spec, holds):
    v = evaluate_claim('T_NI_EDGE_IFF_UNIFORM_INVERSE', build_family(spec))
    assert v.lhs is holds and v.consistent


def test_commuting_edge_characteristic_instances(s4):
    for n in range(2, 9):
        assert evaluate_claim('T_C_EDGE_IFF_ABELIAN', build_family(Cyclic(n))).lhs
    for group in (build_family(Dihedral(3)), build_family(Dihedral(4)), s4):
        v = evaluate_claim('T_C_EDGE_IFF_ABELIAN', group)
        assert v.lhs is False and v.consistent


def test_tree_claim_disagrees_on_complete_graphs(z5):
    # K_5 is minimally connected but not a tree
    v = evaluate_claim('X_TREE_CLAIM', z5, kind='ordersum')
    assert v.lhs is True and v.rhs is False and not v.consistent
    assert evaluate_claim('L31_COMPLETE_STAR_MINIMAL', z5, kind='ordersum').consistent


def test_non_inverse_star_claim_fails_on_z5(z5):
    v = evaluate_claim('X_NI_STAR_CLAIM', z5)
    assert v.rhs is True and v.lhs is False and v.consistent is False


def test_supplementary_claims(s3, q8):
    v = evaluate_claim('S_C_DOMINATING_EQ_CENTER', q8)
    assert v.consistent and v.details['center'] == [0, 2]
    assert evaluate_claim('S_C_DOMINATING_EQ_CENTER', s3).consistent

    v = evaluate_claim('S_OS_GENERATORS_DOMINATE', build_family(Cyclic(12)))
    assert v.consistent and len(v.details['dominating']) == 4
    assert evaluate_claim('S_OS_GENERATORS_DOMINATE', build_family(Cyclic(7))).skipped


def test_pure_graph_claim_needs_kind(z5):
    with pytest.raises(GroupConnError):
        evaluate_claim('WHITNEY', z5)
    with pytest.raises(GroupConnError):
        evaluate_claim('T_C_EDGE_IFF_ABELIAN', z5, kind='coprime')
    verdicts = claim_verdicts('WHITNEY', z5)
    assert [v.graph_kind for v in verdicts] == list(GRAPH_KINDS)
    assert all(v.consistent for v in verdicts)


def test_order_cap(z6):
    with pytest.raises(OrderCapExceededError):
        evaluate_claim('L32_COMMUTING_COMPLETE_IFF_ABELIAN', z6, order_cap=4)


def test_shared_analysis(q8):
    analysis = GroupAnalysis(q8)
    evaluate_claim('T_C_EDGE_IFF_ABELIAN', q8, analysis=analysis)
    ga = analysis.graph('commuting')
    evaluate_claim('T_C_VERTEX_IFF_ABELIAN', q8, analysis=analysis)
    assert analysis.graph('commuting') is ga


#%% --------------------------------------------------------------------------------------------------------------------
# SANITY INVARIANTS
# ----------------------------------------------------------------------------------------------------------------------
def test_sanity_coprime_z9():
    checks = _by_id(sanity_invariants(build_graph(build_family(Cyclic(9)), 'coprime')))
    assert checks['WHITNEY'].passed and checks['WHITNEY'].evidence == '1 <= 1 <= 1'
    assert checks['DIAM2'].passed


def test_sanity_null_graph(klein):
    checks = _by_id(sanity_invariants(build_graph(klein, 'ordersum')))
    assert checks['WHITNEY'].passed and checks['WHITNEY'].evidence == '0 <= 0 <= 0'
    assert checks['DIAM2'].skipped
    assert checks['SWEEP_BOUNDS_EDGE'].skipped


def test_sanity_non_inverse_z5(z5):
    checks = _by_id(sanity_invariants(build_graph(z5, 'noninverse')))
    assert checks['WHITNEY'].evidence == '3 <= 3 <= 3'
    for key in ('WHITNEY', 'DIAM2', 'ORACLE_EDGE', 'ORACLE_VERTEX', 'SWEEP_METHODS_EDGE', 'SWEEP_METHODS_VERTEX',
                'SWEEP_BOUNDS_EDGE', 'SWEEP_BOUNDS_VERTEX', 'DEGREE_SUM'):
        assert checks[key].passed, key


def test_sanity_skips_oracles_above_bound(s4):
    checks = _by_id(sanity_invariants(build_graph(s4, 'commuting'), oracle_max_n=12))
    assert checks['ORACLE_EDGE'].skipped and checks['ORACLE_VERTEX'].skipped
    assert 'SWEEP_METHODS_EDGE' not in checks
    assert checks['WHITNEY'].passed


def test_group_invariants(s3, q8, z6):
    for group in (s3, q8, z6, build_family(Cyclic(1))):
        checks = group_invariants(group)
        assert [c.id for c in checks] == ['LAGRANGE', 'ABELIAN_IFF_CENTER', 'CLASS_EQUATION',
                                          'INVOLUTION_PARITY', 'PROFILE_CHAIN']
        assert all(c.passed for c in checks)


#%% --------------------------------------------------------------------------------------------------------------------
# CORPUS
# ----------------------------------------------------------------------------------------------------------------------
def test_run_corpus_commuting_complete_iff_abelian():
    corpus = [Cyclic(n) for n in range(2, 9)]
    report = run_corpus(corpus, ['L32_COMMUTING_COMPLETE_IFF_ABELIAN'])
    assert len(report.verdicts) == 7
    assert all(v.consistent for v in report.verdicts)
    assert report.tallies().loc['L32_COMMUTING_COMPLETE_IFF_ABELIAN'].tolist() == [7, 7, 0, 0]
    assert not report.invariant_failures


def test_run_corpus_non_inverse_claims():
    report = run_corpus([ElementaryAbelian(2, 2), Cyclic(4)], ['L35_NI_COMPLETE_IFF_SELF_INVERSE'])
    first, second = report.verdicts
    assert first.lhs is True and second.lhs is False
    assert first.consistent and second.consistent


def test_run_corpus_without_claims():
    report = run_corpus([Cyclic(3), Dihedral(3)], [])
    assert report.verdicts == []
    assert report.tallies().empty
    assert report.invariants
    assert report.invariant_summary()['WHITNEY'] == {'passed': 8, 'failed': 0, 'skipped': 0}


def test_run_corpus_ordering():
    corpus = [Cyclic(5), Cyclic(3)]
    report = run_corpus(corpus, ['WHITNEY', 'L32_COMMUTING_COMPLETE_IFF_ABELIAN'])
    keys = [(v.claim, v.group_label, v.graph_kind) for v in report.verdicts]
    assert keys[:4] == [('WHITNEY', 'cyclic:5', kind) for kind in GRAPH_KINDS]
    assert keys[4:8] == [('WHITNEY', 'cyclic:3', kind) for kind in GRAPH_KINDS]
    assert keys[8:] == [('L32_COMMUTING_COMPLETE_IFF_ABELIAN', 'cyclic:5', 'commuting'),
                        ('L32_COMMUTING_COMPLETE_IFF_ABELIAN', 'cyclic:3', 'commuting')]


def test_run_corpus_reports_inconsistencies(z4):
    report = run_corpus([Cyclic(4), Cyclic(5)], ['T_OS_VERTEX_IFF_PRIME_POWER', 'X_NI_STAR_CLAIM'])
    bad = {(v.claim, v.group_label) for v in report.inconsistent}
    assert ('T_OS_VERTEX_IFF_PRIME_POWER', 'cyclic:4') in bad
    assert ('X_NI_STAR_CLAIM', 'cyclic:5') in bad
    assert not report.invariant_failures


def test_run_corpus_wraps_build_errors():
    with pytest.raises(CorpusBuildError) as info:
        run_corpus([Cyclic(3), Cyclic(100)], ['WHITNEY'], order_cap=64)
    assert 'cyclic:100' in str(info.value)


def test_config_echo():
    report = run_corpus([Cyclic(3)], ['WHITNEY'], order_cap=32, oracle_max_n=6, method='full')
    assert report.config['order_cap'] == 32
    assert report.config['oracle_max_n'] == 6
    assert report.config['sweep_method'] == 'full'
    assert report.config['claims'] == ['WHITNEY']


def test_default_corpus_puts_every_claim_in_scope():
    corpus = get_default_corpus()
    labels = [spec.label for spec in corpus]
    assert len(labels) == len(set(labels))
    assert max(spec.order for spec in corpus) <= 64

    groups = [build_family(spec) for spec in corpus if spec.order <= 16]
    analyses = [GroupAnalysis(g) for g in groups]
    for claim in CLAIMS:
        assert any(not v.skipped for ga in analyses
                   for v in claim_verdicts(claim.id, ga.group, analysis=ga)), claim.id


def test_run_corpus_drops_repeated_claims():
    report = run_corpus([Cyclic(3)], ['WHITNEY', ClaimId.WHITNEY, 'X_TREE_CLAIM'])
    assert report.claims == ['WHITNEY', 'X_TREE_CLAIM']
    assert report.tallies().loc['WHITNEY', 'evaluated'] == 4
