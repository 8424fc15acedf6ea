# -*- coding: utf-8 -*-
"""
Reading corpus files and writing corpus reports (JSON and CSV).

Reports are written with a fixed key order and no timestamps, so two runs
over the same corpus and configuration give byte-identical files.
"""
import json
import logging

import pandas as pd

from ..errors import GroupSpecSyntaxError, InvalidParameterError
from ..groups.families import parse_group_spec
from .claims import get_claim

logger = logging.getLogger(__name__)

REPORT_FORMATS = ('json', 'csv')
VERDICT_COLUMNS = ['claim', 'group', 'graph_kind', 'lhs', 'rhs', 'consistent', 'skipped', 'details']


#%% --------------------------------------------------------------------------------------------------------------------
# CORPUS FILES
# ----------------------------------------------------------------------------------------------------------------------
def parse_corpus(text, path=None):
    corpus = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split('#', 1)[0].strip()
        if not line: continue
        try:
            corpus.append(parse_group_spec(line))
        except GroupSpecSyntaxError as exc:
            where = f'{path}:{lineno}' if path is not None else f'line {lineno}'
            raise GroupSpecSyntaxError(f'{where}: {exc}')
    return corpus


def read_corpus_file(path):
    """One group spec per line; '#' starts a comment."""
    with open(path) as f:
        return parse_corpus(f.read(), path=path)


def parse_claim_list(text):
    """Comma-separated claim ids, e.g. 'WHITNEY,T_C_EDGE_IFF_ABELIAN'. Repeats are dropped."""
    ids = [tok.strip() for tok in text.split(',') if tok.strip()]
    return list(dict.fromkeys(get_claim(claim_id).id for claim_id in ids))


#%% --------------------------------------------------------------------------------------------------------------------
# REPORTS
# ----------------------------------------------------------------------------------------------------------------------
def report_to_dict(report):
    tallies = report.tallies()

    claims = []
    for claim_id in report.claims:
        claim = get_claim(claim_id)
        row = tallies.loc[claim_id]
        claims.append({'id': claim_id,
                       'statement': claim.statement,
                       'form': str(claim.form),
                       'evaluated': int(row['evaluated']),
                       'consistent': int(row['consistent']),
                       'inconsistent': int(row['inconsistent']),
                       'skipped': int(row['skipped']),
                       'failures': [v.as_dict() for v in report.inconsistent if v.claim == claim_id]})

    return {'config': report.config,
            'corpus': list(report.corpus),
            'claims': claims,
            'verdicts': [v.as_dict() for v in report.verdicts],
            'invariants': {'summary': report.invariant_summary(),
                           'failures': report.invariant_failures}}


def report_to_json(report):
    return json.dumps(report_to_dict(report), indent=2) + '\n'


def report_to_frame(report):
    """One row per verdict; details as a compact JSON string."""
    rows = []
    for v in report.verdicts:
        row = v.as_dict()
        row['details'] = json.dumps(row['details'], separators=(',', ':'))
        rows.append(row)
    return pd.DataFrame(rows, columns=VERDICT_COLUMNS)


def report_to_csv(report):
    return report_to_frame(report).to_csv(index=False, lineterminator='\n')


def write_report(report, path=None, format='json'):
    """
        Serializes a report. Returns the text; writes it to path if given.
    """
    if format == 'json':
        text = report_to_json(report)

    elif format == 'csv':
        text = report_to_csv(report)

    else:
        raise InvalidParameterError(f'unknown report format {format!r}; expected one of {REPORT_FORMATS}')

    if path is not None:
        with open(path, 'w', newline='') as f:
            f.write(text)
        logger.info(f'wrote {format} report to {path}')

    return text
