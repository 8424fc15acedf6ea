# -*- coding: utf-8 -*-
import json

import pandas as pd

from groupconn.cli import main
from groupconn.groups.families import Dihedral, build_family, parse_group_spec
from groupconn.groups.group_core import read_cayley_table, write_cayley_table


def _rows(text):
    rows = {}
    for line in text.splitlines():
        parts = line.split(None, 1)
        if len(parts) == 2: rows[parts[0]] = parts[1].strip()
    return rows


def test_invariants_order_sum_z5(capsys):
    assert main(['invariants', '--group', 'cyclic:5', '--kind', 'ordersum']) == 0
    rows = _rows(capsys.readouterr().out)
    assert rows['complete'] == 'True'
    assert rows['kappa'] == rows['kappa_edge'] == rows['min_degree'] == '4'
    assert rows['dominating'] == '0 1 2 3 4'


def test_invariants_per_vertex(capsys):
    assert main(['invariants', '--group', 'cyclic:4', '--kind', 'noninverse', '--per-vertex']) == 0
    out = capsys.readouterr().out
    assert 'eccentricity' in out and 'element_order' in out


def test_minimality_s3_commuting(capsys):
    assert main(['minimality', '--group', 'dihedral:3', '--kind', 'commuting', '--mode', 'edge']) == 0
    rows = _rows(capsys.readouterr().out)
    assert rows['measure'] == 'edge'
    assert rows['holds'] == 'False'
    assert rows['violating'] == '0-1 0-2 1-2'


def test_minimality_per_edge(capsys):
    assert main(['minimality', '--group', 'cyclic:4', '--kind', 'ordersum', '--mode', 'vertex',
                 '--per-edge', '--method', 'full']) == 0
    out = capsys.readouterr().out
    assert 'vertex_value' in out
    assert _rows(out)['violating'] == '1-3'


def test_graph_export(tmp_path, capsys):
    dot, csv = tmp_path / 'g.dot', tmp_path / 'g.csv'
    assert main(['graph', '--group', 'cyclic:6', '--kind', 'coprime', '--dot', str(dot), '--csv', str(csv)]) == 0
    assert '6 vertices, 7 edges' in capsys.readouterr().out
    assert dot.read_text().startswith('strict graph coprime {')
    assert len(pd.read_csv(csv)) == 7


def test_group_from_file(tmp_path, capsys):
    path = tmp_path / 's3.txt'
    write_cayley_table(build_family(Dihedral(3)), path)
    assert main(['group', '--group', f'file:{path}']) == 0
    rows = _rows(capsys.readouterr().out)
    assert rows['order'] == '6'
    assert rows['is_abelian'] == 'False'
    assert rows['class_equation'] == '6 = 1 + 2 + 3'


def test_verify_to_stdout(tmp_path, capsys):
    corpus = tmp_path / 'empty.txt'
    corpus.write_text('# nothing yet\n')
    status = main(['verify', '--claims', 'L32_COMMUTING_COMPLETE_IFF_ABELIAN,X_TREE_CLAIM',
                   '--corpus', str(corpus)])
    assert status == 0
    d = json.loads(capsys.readouterr().out)
    assert d['corpus'] == []


def test_verify_reports_findings_with_status_zero(tmp_path, capsys):
    corpus = tmp_path / 'corpus.txt'
    corpus.write_text('cyclic:4\ncyclic:5\n')
    out = tmp_path / 'report.json'
    status = main(['verify', '--corpus', str(corpus), '--claims', 'T_OS_VERTEX_IFF_PRIME_POWER',
                   '--out', str(out)])
    assert status == 0
    d = json.loads(out.read_text())
    assert d['claims'][0]['inconsistent'] == 1
    assert capsys.readouterr().out == ''


def test_verify_is_byte_identical(tmp_path):
    corpus = tmp_path / 'corpus.txt'
    corpus.write_text('cyclic:6\ndicyclic:2\nea:2,2\n')
    outputs = []
    for name in ('a.csv', 'b.csv'):
        path = tmp_path / name
        assert main(['verify', '--corpus', str(corpus), '--out', str(path), '--format', 'csv']) == 0
        outputs.append(path.read_bytes())
    assert outputs[0] == outputs[1]


def test_oracle(capsys):
    assert main(['oracle', '--trials', '40', '--seed', '1', '--max-n', '8']) == 0
    assert '0 disagreements' in capsys.readouterr().out


def test_usage_errors(capsys):
    assert main(['invariants', '--group', 'cyclic:5']) == 2
    assert main(['graph', '--group', 'cyclic:5', '--kind', 'power']) == 2
    assert main(['oracle', '--max-n', '13']) == 2
    assert main([]) == 2


def test_library_errors(capsys):
    assert main(['group', '--group', 'klein:4']) == 1
    assert 'unknown family' in capsys.readouterr().err
    assert main(['--order-cap', '10', 'group', '--group', 'cyclic:12']) == 1
    assert main(['group', '--group', 'file:/nonexistent/table.txt']) == 1
    assert '/nonexistent/table.txt' in capsys.readouterr().err


def test_verify_repeated_claim_ids(tmp_path, capsys):
    corpus = tmp_path / 'corpus.txt'
    corpus.write_text('cyclic:5\n')
    assert main(['verify', '--corpus', str(corpus), '--claims', 'WHITNEY,WHITNEY']) == 0
    d = json.loads(capsys.readouterr().out)
    assert [c['id'] for c in d['claims']] == ['WHITNEY']
    assert d['claims'][0]['evaluated'] == 4


def test_group_writes_table(tmp_path, capsys):
    path = tmp_path / 'q8.txt'
    assert main(['group', '--group', 'dicyclic:2', '--out', str(path)]) == 0
    assert _rows(capsys.readouterr().out)['center_size'] == '2'
    g = read_cayley_table(path)
    assert g.order == 8
    assert (g.table == build_family(parse_group_spec('dicyclic:2')).table).all()
