#! /usr/bin/python3
# -*- coding: utf-8 -*-
"""
    homshift.cli.py : command line interface
"""

import argparse
import collections
import logging
import sys

import pandas as pd

from homshift.__version__ import __version__
from homshift.core.graph import CliqueWhiskeredGraph, Graph, clique_corona, clique_whisker, cm_cameron_walker, \
    whiskered_cycle, whiskered_graph
from homshift.core.monomial import MonomialIdeal
from homshift.core.report import TheoremReport
from homshift.io import export
from homshift.io.load import load, read_json
from homshift.property import corpus, linquot, pipelines
from homshift.property.covers import cover_ideal, minimal_vertex_covers
from homshift.property.resolution import betti_table
from homshift.tools.config import COMMANDS, DEFAULT_SEED, FORMATS, MODES, ROUTES, Caps, RunConfig
from homshift.tools.errors import HomShiftError, ParseError, PreconditionError

__all__ = ["main", "build_parser", "run", "FAMILIES"]

logger = logging.getLogger(__name__)

LEVELS = [logging.WARNING, logging.INFO, logging.DEBUG]
FAMILIES = ['whiskered-cycle', 'whiskered', 'clique-whisker', 'cameron-walker', 'clique-corona']

Output = collections.namedtuple('Output', ['data', 'frame', 'text', 'passed'])


def set_logging(verbose):
    """
    Console logging, level picked by the number of -v flags
    """
    level = LEVELS[min(len(LEVELS) - 1, verbose)]
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter('[%(levelname)s](%(name)s): %(message)s'))
    root = logging.getLogger('homshift')
    root.handlers = [handler]
    root.setLevel(level)


def _input(config):
    if not config.inputs:
        raise ParseError('command %s needs an input file' % config.command)
    return load(config.inputs[0])


def _ideal_of(obj, caps):
    if isinstance(obj, MonomialIdeal):
        return obj
    if isinstance(obj, CliqueWhiskeredGraph):
        return cover_ideal(obj.graph, caps=caps)
    return cover_ideal(obj, caps=caps)


def _graph_of(obj):
    if isinstance(obj, CliqueWhiskeredGraph):
        return obj.graph
    if isinstance(obj, Graph):
        return obj
    raise PreconditionError('a graph is required, got an ideal')


def _cw_of(obj):
    if not isinstance(obj, CliqueWhiskeredGraph):
        logger.error('input is not a clique-whiskered graph')
        raise PreconditionError('a clique-whiskered graph (with "roles" or "cliques") is required')
    return obj


def _ideal_frame(ideal):
    return pd.DataFrame({'generator': [str(g) for g in ideal.generators],
                         'degree': [g.degree for g in ideal.generators]})


def _report_output(report):
    frame = pd.DataFrame(report)
    text = frame[['subject', 'check', 'k', 'passed', 'witness', 'route']].to_string(index=False) if len(frame) \
        else 'no checks'
    text += '\n%s: %s' % (report.subject, 'passed' if report.passed else 'FAILED')
    return Output(export.report_to_dict(report), frame, text, report.passed)


def cmd_covers(config):
    cover_set = minimal_vertex_covers(_graph_of(_input(config)), caps=config.caps)
    text = '\n'.join('{%s}' % ', '.join(cover) for cover in cover_set)
    return Output(export.covers_to_dict(cover_set), cover_set.to_frame(), text, True)


def cmd_cover_ideal(config):
    ideal = cover_ideal(_graph_of(_input(config)), caps=config.caps)
    return Output(export.ideal_to_dict(ideal), _ideal_frame(ideal), str(ideal), True)


def cmd_hs(config):
    if config.k is None:
        raise ParseError('command hs needs --k')
    obj = _input(config)
    subject = obj if isinstance(obj, (MonomialIdeal, CliqueWhiskeredGraph)) else _ideal_of(obj, config.caps)
    result = pipelines.compute_hs(subject, config.k, route=config.route, caps=config.caps)
    data = {'k': config.k, 'route': result.route, 'ideal': export.ideal_to_dict(result.ideal), 'agree': result.agree}
    text = 'HS_%i = %s  [%s]' % (config.k, result.ideal, result.route)
    if result.agree is not None:
        text += '\nroutes %s' % ('agree' if result.agree else 'DISAGREE')
    return Output(data, _ideal_frame(result.ideal), text, result.agree is not False)


def cmd_betti(config):
    ideal = _ideal_of(_input(config), config.caps)
    table = betti_table(ideal, caps=config.caps, jobs=config.jobs)
    text = '%s\n' % ideal
    if len(table):
        text += '%s\npd = %i, reg = %i' % (table.graded().to_string(), table.projective_dimension(),
                                           table.regularity())
    return Output(export.betti_to_dict(table), export.betti_to_frame(table), text, True)


def cmd_check(config):
    report = pipelines.theorem_suite(_cw_of(_input(config)), mode=config.mode, caps=config.caps,
                                     subject=config.inputs[0])
    return _report_output(report)


def cmd_counterexample(config):
    k = config.k if config.k is not None else config.params.get('k')
    if k is None:
        raise ParseError('command counterexample needs k')
    return _report_output(pipelines.verify_counterexample(int(k), caps=config.caps))


def _int_list(text):
    try:
        return [int(item) for item in str(text).split(',') if item]
    except ValueError as err:
        raise ParseError('expected a comma separated list of integers, got %r' % text) from err


def construct(family, params):
    """
    :param family: str, one of FAMILIES
    :param params: dict of str, 'k' for whiskered-cycle, 'graph' (file) otherwise, with 'm' and 'extra' for
        cameron-walker, 't' for clique-corona and 'cliques' (JSON file with {"cliques": ...}) for clique-whisker
    :return: CliqueWhiskeredGraph
    """
    if family not in FAMILIES:
        raise ParseError('unknown family %r, expected one of %s' % (family, ', '.join(FAMILIES)))
    if family == 'whiskered-cycle':
        return whiskered_cycle(int(params.get('k', 2)))
    if 'graph' not in params:
        raise ParseError('family %s needs graph=FILE' % family)
    graph = _graph_of(load(params['graph']))
    if family == 'whiskered':
        return whiskered_graph(graph)
    if family == 'clique-whisker':
        if 'cliques' not in params:
            raise ParseError('family clique-whisker needs cliques=FILE')
        return clique_whisker(graph, read_json(params['cliques'])['cliques'])
    if family == 'cameron-walker':
        return cm_cameron_walker(graph, int(params.get('m', 1)), extra_components=_int_list(params.get('extra', '')))
    return clique_corona(graph, _int_list(params.get('t', '')))


def cmd_construct(config):
    family = config.params.get('family')
    cw_graph = construct(family, config.params)
    return Output(export.graph_to_dict(cw_graph), None, export.dumps(export.graph_to_dict(cw_graph)), True)


def _target_ideal(config):
    obj = _input(config)
    ideal = _ideal_of(obj, config.caps)
    if config.k is not None:
        ideal = pipelines.compute_hs(ideal, config.k, route='oracle', caps=config.caps).ideal
    return ideal


def cmd_find_lq(config):
    ideal = _target_ideal(config)
    order = linquot.find_order(ideal, caps=config.caps)
    if order is None:
        text = '%s has no generator order with linear quotients' % ideal
    else:
        text = '\n'.join('%s  set = {%s}' % (m, ', '.join(order.set_of(m))) for m in order.sequence)
    return Output(export.order_to_dict(order), None, text, True)


def cmd_check_wpm(config):
    ideal = _target_ideal(config)
    if config.params.get('search'):
        varorder = linquot.wpm_order_search(ideal, caps=config.caps)
        data = {'order': list(varorder) if varorder else None}
        text = 'weakly polymatroidal order: %s' % ('>'.join(varorder) if varorder else 'none')
        return Output(data, None, text, varorder is not None)
    varorder = config.params.get('order')
    varorder = varorder.split(',') if varorder else None
    result = linquot.is_weakly_polymatroidal(ideal, varorder)
    data = {'weakly_polymatroidal': bool(result), 'witness': None if result else result.to_dict()}
    text = 'weakly polymatroidal' if result else 'not weakly polymatroidal: %s' % result
    return Output(data, None, text, bool(result))


def cmd_lattice(config):
    dot = export.lcm_lattice_dot(_ideal_of(_input(config), config.caps), caps=config.caps)
    return Output({'dot': dot}, None, dot, True)


def cmd_suite(config):
    mode = config.mode
    if mode == 'chordal':
        graphs = corpus.chordal_corpus()
    elif mode == 'cameron_walker':
        graphs = corpus.cameron_walker_corpus()
    elif mode == 'clique_corona':
        graphs = corpus.corona_corpus()
    else:
        graphs = corpus.corpus(int(config.params.get('n', 50)), seed=config.seed,
                               max_base_vertices=int(config.params.get('max_base_vertices', 5)), caps=config.caps)
    report = pipelines.run_suite(graphs, mode=mode, jobs=config.jobs, caps=config.caps, seed=config.seed)
    if mode == 'clique_corona':
        report = TheoremReport.merge([report, pipelines.corona_dichotomy(caps=config.caps)], subject=report.subject)
    return _report_output(report)


COMMAND_FUNCTIONS = {'covers': cmd_covers, 'cover-ideal': cmd_cover_ideal, 'hs': cmd_hs, 'betti': cmd_betti,
                     'check': cmd_check, 'counterexample': cmd_counterexample, 'construct': cmd_construct,
                     'find-lq': cmd_find_lq, 'check-wpm': cmd_check_wpm, 'lattice': cmd_lattice,
                     'suite': cmd_suite}


def render(output, fmt):
    """
    :return: str, the output in the requested format
    """
    if fmt == 'json':
        return export.dumps(output.data) + '\n'
    if fmt == 'csv':
        if output.frame is None:
            raise ParseError('no CSV rendering for this command')
        return export.to_csv(output.frame)
    return output.text.rstrip('\n') + '\n'


def build_parser():
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument('-v', '--verbose', action='count', default=0, help='-v info, -vv debug')
    parent.add_argument('--format', choices=FORMATS, default='human')
    parent.add_argument('--seed', type=int, default=DEFAULT_SEED)
    parent.add_argument('--jobs', type=int, default=1)
    for name in Caps.names():
        parent.add_argument('--%s' % name.replace('_', '-'), type=int, default=None, dest=name)

    parser = argparse.ArgumentParser(prog='homshift', description='Homological shift ideals of cover ideals of '
                                                                  'clique-whiskered graphs')
    parser.add_argument('--version', action='version', version='%(prog)s ' + __version__)
    commands = parser.add_subparsers(dest='command', metavar='command')
    commands.required = True

    for name in ['covers', 'cover-ideal', 'betti', 'lattice']:
        sub = commands.add_parser(name, parents=[parent])
        sub.add_argument('input')
    sub = commands.add_parser('hs', parents=[parent])
    sub.add_argument('input')
    sub.add_argument('--k', type=int, required=True)
    sub.add_argument('--route', choices=ROUTES, default='both')
    sub = commands.add_parser('check', parents=[parent])
    sub.add_argument('input')
    sub.add_argument('--mode', choices=MODES, default='generic')
    sub = commands.add_parser('counterexample', parents=[parent])
    sub.add_argument('k', type=int)
    sub = commands.add_parser('construct', parents=[parent])
    sub.add_argument('family', choices=FAMILIES)
    sub.add_argument('params', nargs='*', metavar='key=value')
    sub = commands.add_parser('find-lq', parents=[parent])
    sub.add_argument('input')
    sub.add_argument('--k', type=int, default=None, help='search an order of HS_k instead')
    sub = commands.add_parser('check-wpm', parents=[parent])
    sub.add_argument('input')
    sub.add_argument('--k', type=int, default=None)
    sub.add_argument('--order', default=None, help='comma separated variable order, first is largest')
    sub.add_argument('--search', action='store_true', help='search a weakly polymatroidal variable order')
    sub = commands.add_parser('suite', parents=[parent])
    sub.add_argument('--mode', choices=MODES, default='generic')
    sub.add_argument('--n', type=int, default=50)
    sub.add_argument('--max-base-vertices', type=int, default=5)
    return parser


def config_from_args(args):
    """
    :param args: argparse.Namespace
    :return: RunConfig
    """
    caps = Caps.from_env().replace(**{name: getattr(args, name) for name in Caps.names()})
    params = {}
    if args.command == 'construct':
        params['family'] = args.family
        for item in args.params:
            if '=' not in item:
                raise ParseError('construct parameter %r is not key=value' % item)
            key, value = item.split('=', 1)
            params[key.strip()] = value.strip()
    elif args.command == 'check-wpm':
        params.update(order=args.order, search=args.search)
    elif args.command == 'suite':
        params.update(n=args.n, max_base_vertices=args.max_base_vertices)
    inputs = (args.input,) if getattr(args, 'input', None) else ()
    return RunConfig.from_dict({'command': args.command, 'inputs': inputs, 'caps': caps, 'format': args.format,
                                'seed': args.seed, 'jobs': args.jobs, 'route': getattr(args, 'route', 'both'),
                                'k': getattr(args, 'k', None), 'mode': getattr(args, 'mode', 'generic'),
                                'params': params})


def run(config, stream=None):
    """
    :param config: RunConfig
    :param stream: writable text stream, default sys.stdout
    :return: int, exit code (0 success, 1 failed check)
    """
    stream = sys.stdout if stream is None else stream
    output = COMMAND_FUNCTIONS[config.command](config)
    stream.write(render(output, config.format))
    return 0 if output.passed else 1


def main(argv=None, stream=None):
    """
    :param argv: list of str, default sys.argv[1:]
    :return: int, exit code: 0 success, 1 failed check, 2 error
    """
    args = build_parser().parse_args(argv)
    set_logging(args.verbose)
    try:
        config = config_from_args(args)
        logger.info('(%s) running with %s' % (config.command, config.caps))
        return run(config, stream=stream)
    except HomShiftError as err:
        logger.debug('(%s) %s' % (args.command, type(err).__name__))
        sys.stderr.write('homshift: error: %s\n' % err)
        return 2


assert sorted(COMMAND_FUNCTIONS) == sorted(COMMANDS)
