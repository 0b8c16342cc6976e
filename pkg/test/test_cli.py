#! /usr/bin/python3
# -*- coding: utf-8 -*-
"""
    tests for homshift.cli
"""

import io
import json

import pytest

from homshift.cli import FAMILIES, build_parser, config_from_args, construct, main
from homshift.core.graph import clique_corona, complete_graph, whiskered_cycle
from homshift.io.load import loads
from homshift.tools.config import Caps
from homshift.tools.errors import ParseError

C4 = {'vertices': ['x1', 'x2', 'x3', 'x4'], 'edges': [['x1', 'x2'], ['x2', 'x3'], ['x3', 'x4'], ['x4', 'x1']]}
K2 = {'vertices': ['a', 'b'], 'edges': [['a', 'b']]}
TWO_SQUARES = {'variables': ['x1', 'x2', 'x3', 'x4'], 'generators': ['x1x3', 'x2x4']}


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, data in [('c4', C4), ('k2', K2), ('ideal', TWO_SQUARES),
                       ('triangle', dict(K2, cliques=[['a', 'b']])), ('cliques', {'cliques': [['a', 'b']]})]:
        path = tmp_path / ('%s.json' % name)
        path.write_text(json.dumps(data), encoding='utf-8')
        paths[name] = str(path)
    broken = tmp_path / 'broken.json'
    broken.write_text('{"vertices": [', encoding='utf-8')
    paths['broken'] = str(broken)
    return paths


def call(argv):
    stream = io.StringIO()
    code = main(argv, stream=stream)
    return code, stream.getvalue()


def test_covers(files):
    code, out = call(['covers', files['c4']])
    assert code == 0
    assert out.splitlines() == ['{x1, x3}', '{x2, x4}']
    code, out = call(['covers', files['c4'], '--format', 'json'])
    assert sorted(json.loads(out)['covers']) == [['x1', 'x3'], ['x2', 'x4']]


def test_cover_ideal(files):
    code, out = call(['cover-ideal', files['k2'], '--format', 'json'])
    assert code == 0
    assert json.loads(out) == {'variables': ['a', 'b'], 'generators': [{'a': 1}, {'b': 1}]}


def test_malformed_input(files, capsys):
    assert call(['covers', files['broken']])[0] == 2
    assert 'homshift: error: malformed JSON' in capsys.readouterr().err
    assert call(['covers', files['ideal']])[0] == 2
    assert call(['betti', files['k2'] + '.missing'])[0] == 2


def test_hs(files):
    code, out = call(['hs', files['c4'], '--k', '0', '--format', 'json'])
    assert code == 0
    data = json.loads(out)
    assert data['route'] == 'oracle'
    assert len(data['ideal']['generators']) == 2
    code, out = call(['hs', files['triangle'], '--k', '1'])
    assert code == 0
    assert out.startswith('HS_1 = ')
    assert 'routes agree' in out


def test_hs_requires_k(files):
    with pytest.raises(SystemExit):
        build_parser().parse_args(['hs', files['c4']])


def test_betti_csv(files):
    code, out = call(['betti', files['ideal'], '--format', 'csv'])
    assert code == 0
    assert out.splitlines() == ['k,|a|,a,beta', '0,2,x1x3,1', '0,2,x2x4,1', '1,4,x1x2x3x4,1']


def test_betti_cap(files):
    assert call(['betti', files['ideal'], '--max-generators', '1'])[0] == 2


def test_counterexample():
    code, out = call(['counterexample', '2', '--format', 'json'])
    assert code == 0
    data = json.loads(out)
    assert data['passed'] is True
    assert data['subject'] == 'G_2'
    assert call(['counterexample', '1'])[0] == 2


def test_check(files):
    code, out = call(['check', files['triangle'], '--mode', 'chordal'])
    assert code == 0
    assert out.rstrip().endswith('passed')
    assert call(['check', files['triangle'], '--mode', 'cameron_walker'])[0] == 2
    assert call(['check', files['c4']])[0] == 2


def test_construct(files, tmp_path):
    code, out = call(['construct', 'whiskered-cycle', 'k=2'])
    assert code == 0
    assert loads(json.loads(out)) == whiskered_cycle(2)
    code, out = call(['construct', 'clique-corona', 'graph=%s' % files['k2'], 't=2,2', '--format', 'json'])
    assert code == 0
    assert loads(json.loads(out)) == clique_corona(complete_graph(['a', 'b']), [2, 2])
    assert call(['construct', 'whiskered-cycle', '--format', 'csv'])[0] == 2
    assert call(['construct', 'whiskered', 'k=2'])[0] == 2


def test_construct_families(files):
    params = {'graph': files['k2'], 'cliques': files['cliques'], 'm': '1', 'extra': '2', 't': '2,3'}
    sizes = {family: len(construct(family, params)) for family in FAMILIES if family != 'whiskered-cycle'}
    assert sizes == {'whiskered': 4, 'clique-whisker': 3, 'cameron-walker': 7, 'clique-corona': 7}
    with pytest.raises(ParseError):
        construct('petersen', params)
    with pytest.raises(ParseError):
        construct('clique-corona', dict(params, t='2,x'))


def test_find_lq(files):
    code, out = call(['find-lq', files['triangle'], '--format', 'json'])
    assert code == 0
    assert len(json.loads(out)['sequence']) == 3
    code, out = call(['find-lq', files['ideal']])
    assert code == 0
    assert 'no generator order' in out


def test_check_wpm(files):
    code, out = call(['check-wpm', files['ideal']])
    assert code == 1
    assert out.startswith('not weakly polymatroidal')
    assert call(['check-wpm', files['k2']])[0] == 0


def test_lattice(files):
    code, out = call(['lattice', files['ideal']])
    assert code == 0
    assert out.startswith('digraph lcm_lattice {')


def test_config_from_args(files, monkeypatch):
    monkeypatch.setenv('HOMSHIFT_CAPS', 'max_faces=50')
    args = build_parser().parse_args(['suite', '--mode', 'chordal', '--n', '3', '--jobs', '2',
                                      '--max-order-search', '6'])
    config = config_from_args(args)
    assert config.caps == Caps(max_faces=50, max_order_search=6)
    assert config.params == {'n': 3, 'max_base_vertices': 5}
    assert config.jobs == 2
    assert config.inputs == ()


@pytest.mark.slow
def test_suite_chordal():
    code, out = call(['suite', '--mode', 'chordal', '--format', 'json'])
    assert code == 0
    assert json.loads(out)['passed'] is True
