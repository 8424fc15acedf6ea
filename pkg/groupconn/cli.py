# -*- coding: utf-8 -*-
"""
Command line interface.

    groupconn graph       --group SPEC --kind KIND [--dot PATH] [--csv PATH]
    groupconn invariants  --group SPEC --kind KIND [--per-vertex]
    groupconn minimality  --group SPEC --kind KIND [--mode edge|vertex|both] [--per-edge]
    groupconn group       --group SPEC
    groupconn verify      [--corpus PATH] [--claims LIST] [--out PATH] [--format json|csv]
                          [--oracle-max-n M] [--method local|full]
    groupconn oracle      [--trials N] [--seed S] [--max-n M]

Exit status: 0 success, 1 library or file error, 2 usage error, 3 a sanity
invariant failed (verify) or flow and brute force disagree (oracle).
Inconsistent claim verdicts never change the exit status.
"""
import sys
import logging
import argparse

import pandas as pd

from .errors import GroupConnError
from .groups.families import build_family, parse_group_spec
from .groups.group_core import class_equation_holds, profile, write_cayley_table
from .network.connectivity import (VERTEX_ORACLE_MAX_N, connectivity_values, edge_connectivity,
                                   edge_connectivity_oracle, vertex_connectivity, vertex_connectivity_oracle)
from .network.graph_builders import GRAPH_KINDS, build_graph
from .network.graph_core import get_vertex_properties, shape_profile, write_dot, write_edge_csv
from .network.minimality import SWEEP_METHODS, is_minimally_connected, is_minimally_edge_connected
from .network.random_graphs import oracle_test_graphs
from .tasks.claims import get_default_claims
from .tasks.io import REPORT_FORMATS, parse_claim_list, read_corpus_file, write_report
from .tasks.theorem_suite import DEFAULT_ORACLE_MAX_N, get_default_corpus, run_corpus

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_USAGE = 2
EXIT_ARTIFACT_BUG = 3


def _positive_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f'expected a positive integer, got {text!r}')
    if value < 1:
        raise argparse.ArgumentTypeError(f'expected a positive integer, got {text!r}')
    return value


def _print_rows(rows, out):
    for key, value in rows:
        print(f'{key:<16}{value}', file=out)


def _flag_list(values):
    values = list(values)
    return ' '.join(str(v) for v in values) if values else '-'


#%% --------------------------------------------------------------------------------------------------------------------
# SUBCOMMANDS
# ----------------------------------------------------------------------------------------------------------------------
def _build(args):
    group = build_family(parse_group_spec(args.group), order_cap=args.order_cap)
    graph = build_graph(group, args.kind) if getattr(args, 'kind', None) else None
    return group, graph


def cmd_graph(args, out):
    group, graph = _build(args)
    if args.dot: write_dot(graph, args.dot, group=group, name=args.kind)
    if args.csv: write_edge_csv(graph, args.csv)
    print(f'{args.kind} graph of {group.label}: {graph.n} vertices, {graph.num_edges} edges', file=out)
    return EXIT_OK


def cmd_invariants(args, out):
    group, graph = _build(args)
    shape = shape_profile(graph)
    values = connectivity_values(graph)
    p = profile(group)

    _print_rows([('group', group.label),
                 ('kind', args.kind),
                 ('n', graph.n),
                 ('edges', graph.num_edges),
                 ('min_degree', values.min_degree),
                 ('kappa', values.kappa_vertex),
                 ('kappa_edge', values.kappa_edge),
                 ('diameter', shape.diameter if shape.is_connected else 'inf'),
                 ('dominating', _flag_list(shape.dominating_vertices)),
                 ('regular', shape.is_regular),
                 ('complete', shape.is_complete),
                 ('star', shape.is_star),
                 ('abelian', p.is_abelian),
                 ('cyclic', p.is_cyclic),
                 ('p_group', p.is_p_group),
                 ('exponent', p.exponent)], out)

    if args.per_vertex:
        print(file=out)
        print(get_vertex_properties(graph, group=group).to_string(index=False), file=out)

    return EXIT_OK


def cmd_minimality(args, out):
    group, graph = _build(args)

    sweeps = []
    if args.mode in ('edge', 'both'): sweeps.append(is_minimally_edge_connected)
    if args.mode in ('vertex', 'both'): sweeps.append(is_minimally_connected)

    for sweep in sweeps:
        verdict = sweep(graph, method=args.method, with_values=args.per_edge)
        _print_rows([('measure', verdict.measure),
                     ('applicable', verdict.applicable),
                     ('base_value', verdict.base_value),
                     ('holds', verdict.holds),
                     ('violating', _flag_list(f'{u}-{v}' for u, v in verdict.violating_edges))], out)
        if args.per_edge and verdict.per_edge_values:
            df = pd.DataFrame([(u, v, k) for (u, v), k in verdict.per_edge_values.items()],
                              columns=['u', 'v', f'{verdict.measure}_value'])
            print(df.to_string(index=False), file=out)
        print(file=out)

    return EXIT_OK


def cmd_group(args, out):
    group, _ = _build(args)
    p = profile(group)
    eq = class_equation_holds(group)

    _print_rows([('group', group.label)] + list(vars(p).items()), out)
    _print_rows([('class_equation', eq)], out)

    print(file=out)
    df = pd.DataFrame({'element': range(group.order),
                       'order': group.element_order,
                       'inverse': group.inverse,
                       'central': group.center_mask})
    print(df.to_string(index=False), file=out)

    if args.out:
        write_cayley_table(group, args.out)
        logger.info(f'wrote Cayley table of {group.label} to {args.out}')
    return EXIT_OK


def cmd_verify(args, out):
    corpus = read_corpus_file(args.corpus) if args.corpus else get_default_corpus()
    claims = parse_claim_list(args.claims) if args.claims is not None else get_default_claims()

    report = run_corpus(corpus, claims, order_cap=args.order_cap,
                        oracle_max_n=args.oracle_max_n, method=args.method)
    text = write_report(report, path=args.out, format=args.format)
    if args.out is None:
        out.write(text)

    failures = report.invariant_failures
    if failures:
        for row in failures:
            print(f"sanity invariant {row['id']} failed on {row['group']} {row['graph_kind'] or ''}: "
                  f"{row['evidence']}", file=sys.stderr)
        return EXIT_ARTIFACT_BUG

    return EXIT_OK


def cmd_oracle(args, out):
    checked, disagreements = 0, 0
    for graph in oracle_test_graphs(args.trials, args.seed, args.max_n):
        pairs = [('kappa_edge', edge_connectivity(graph), edge_connectivity_oracle(graph)),
                 ('kappa', vertex_connectivity(graph), vertex_connectivity_oracle(graph))]
        for name, flow, brute in pairs:
            if flow != brute:
                disagreements += 1
                print(f'{graph!r} edges={list(graph.edge_list)}: {name} flow {flow}, brute force {brute}',
                      file=out)
        checked += 1

    print(f'checked {checked} graphs, {disagreements} disagreements', file=out)
    return EXIT_ARTIFACT_BUG if disagreements else EXIT_OK


#%% --------------------------------------------------------------------------------------------------------------------
# PARSER
# ----------------------------------------------------------------------------------------------------------------------
def get_parser():
    parser = argparse.ArgumentParser(prog='groupconn', description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument('--order-cap', type=_positive_int, default=None,
                        help='largest group order accepted (default: $GROUPCONN_ORDER_CAP or 200)')
    parser.add_argument('-v', '--verbose', action='count', default=0)

    sub = parser.add_subparsers(dest='command', required=True)

    def with_group(p, kind=True):
        p.add_argument('--group', required=True, help="e.g. cyclic:6, ea:2,3, product:cyclic:3*cyclic:5")
        if kind: p.add_argument('--kind', required=True, choices=GRAPH_KINDS)
        return p

    p = with_group(sub.add_parser('graph', help='build a graph and export it'))
    p.add_argument('--dot', default=None)
    p.add_argument('--csv', default=None)
    p.set_defaults(func=cmd_graph)

    p = with_group(sub.add_parser('invariants', help='connectivity invariants of a graph'))
    p.add_argument('--per-vertex', action='store_true')
    p.set_defaults(func=cmd_invariants)

    p = with_group(sub.add_parser('minimality', help='edge-deletion sweeps'))
    p.add_argument('--mode', choices=('edge', 'vertex', 'both'), default='both')
    p.add_argument('--method', choices=SWEEP_METHODS, default='local')
    p.add_argument('--per-edge', action='store_true')
    p.set_defaults(func=cmd_minimality)

    p = with_group(sub.add_parser('group', help='profile of a group'), kind=False)
    p.add_argument('--out', default=None, help='write the Cayley table to this file')
    p.set_defaults(func=cmd_group)

    p = sub.add_parser('verify', help='evaluate the claims over a corpus')
    p.add_argument('--corpus', default=None, help='file with one group spec per line')
    p.add_argument('--claims', default=None, help='comma-separated claim ids')
    p.add_argument('--out', default=None)
    p.add_argument('--format', choices=REPORT_FORMATS, default='json')
    p.add_argument('--oracle-max-n', type=int, default=DEFAULT_ORACLE_MAX_N)
    p.add_argument('--method', choices=SWEEP_METHODS, default='local')
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser('oracle', help='flow-based connectivity against brute force')
    p.add_argument('--trials', type=int, default=200)
    p.add_argument('--seed', type=int, default=0)
    p.add_argument('--max-n', type=_positive_int, default=9)
    p.set_defaults(func=cmd_oracle)

    return parser


def main(argv=None, out=None):
    parser = get_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code

    if args.command == 'oracle' and args.max_n > VERTEX_ORACLE_MAX_N:
        parser.print_usage(sys.stderr)
        print(f'groupconn oracle: --max-n is limited to {VERTEX_ORACLE_MAX_N}', file=sys.stderr)
        return EXIT_USAGE

    level = logging.WARNING if args.verbose == 0 else logging.INFO if args.verbose == 1 else logging.DEBUG
    logging.basicConfig(stream=sys.stderr, level=level, format='%(levelname)s %(name)s: %(message)s')

    if out is None: out = sys.stdout
    try:
        return args.func(args, out)
    except (GroupConnError, OSError) as exc:
        print(f'groupconn {args.command}: {exc}', file=sys.stderr)
        return EXIT_ERROR


if __name__ == '__main__':
    sys.exit(main())
