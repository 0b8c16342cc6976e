#! /usr/bin/python3
# -*- coding: utf-8 -*-
"""
property/pipelines.py contains the theorem level pipelines: homological shift ideals by route, the Betti splitting
recursion, the whiskered cycle counterexample and the theorem suites over graph corpora
"""

import collections
import concurrent.futures
import logging
import time

from homshift.core.graph import CliqueWhiskeredGraph, components, complete_graph, clique_corona, cycle_graph, \
    induced_delete, is_bipartite, is_chordal, is_connected, neighborhood, remove_apexes, whiskered_cycle
from homshift.core.monomial import Monomial, MonomialIdeal, ideal_sum, scale
from homshift.core.report import TheoremReport
from homshift.property import linquot
from homshift.property.covers import check_apex_count, cover_ideal, minimal_vertex_covers, w_partition
from homshift.property.resolution import betti_table, euler_check, has_linear_resolution, hs_from_betti, \
    off_lattice_spot_check
from homshift.tools import resolve_caps
from homshift.tools.config import DEFAULT_SEED, MODES, ROUTES
from homshift.tools.errors import CapExceededError, HomShiftError, PreconditionError

__status__ = "dev"
__all__ = ["ShiftResult", "compute_hs", "betti_splitting_hs", "verify_counterexample", "theorem_suite",
           "run_suite", "corona_dichotomy", "check_mode"]

module_logger = logging.getLogger(__name__)

ShiftResult = collections.namedtuple('ShiftResult', ['ideal', 'route', 'agree'])


def _lex_cover_order(cw_graph, caps):
    ideal = cover_ideal(cw_graph.graph, caps=caps)
    order = linquot.verify_order(ideal, linquot.lex_order(ideal))
    if not order:
        module_logger.error('(%r) lexicographic order of J has no linear quotients: %s' % (cw_graph, order))
        raise HomShiftError('lexicographic order of J(G^pi) has no linear quotients: %s' % order)
    return ideal, order


def compute_hs(subject, k, route='both', caps=None):
    """
    :param subject:
        MonomialIdeal, or CliqueWhiskeredGraph for its cover ideal
    :param k: int, non-negative
    :param route:
        'oracle': Betti numbers from Koszul homology
        'linquot': linear quotients (lex order of J(G^pi) for a graph, order search for an ideal)
        'both': both routes, compared; the oracle is skipped above caps.max_generators
    :param caps: Caps
    :return: ShiftResult(ideal, route used, agree), agree is None unless both routes ran
    """
    caps = resolve_caps(caps)
    if route not in ROUTES:
        raise PreconditionError('unknown route %r, expected one of %s' % (route, ', '.join(ROUTES)))
    if k < 0:
        raise PreconditionError('homological index must be non-negative, got %i' % k)
    if isinstance(subject, CliqueWhiskeredGraph):
        ideal, order = _lex_cover_order(subject, caps)
    elif isinstance(subject, MonomialIdeal):
        ideal, order = subject, None
    else:
        raise PreconditionError('cannot compute shifts of %r' % (subject,))

    def via_linquot():
        _order = order
        if _order is None:
            _order = linquot.find_order(ideal, caps=caps)
            if _order is None:
                raise PreconditionError('ideal %s has no linear quotient order' % ideal)
        return linquot.hs_via_linear_quotients(ideal, _order, k)

    if route == 'oracle':
        return ShiftResult(hs_from_betti(ideal, k, caps=caps), 'oracle', None)
    if route == 'linquot':
        return ShiftResult(via_linquot(), 'linquot', None)
    if len(ideal) > caps.max_generators:
        module_logger.info('(%s) %i generators, oracle route skipped' % (ideal, len(ideal)))
        return ShiftResult(via_linquot(), 'linquot', None)
    oracle = hs_from_betti(ideal, k, caps=caps)
    try:
        lq = via_linquot()
    except (PreconditionError, CapExceededError) as err:
        module_logger.warning('(%s) linear quotient route unavailable, oracle only: %s' % (ideal, err))
        return ShiftResult(oracle, 'oracle', None)
    if lq != oracle:
        module_logger.warning('(%s) k=%i routes disagree: %s vs %s' % (ideal, k, oracle, lq))
    return ShiftResult(oracle, 'both', lq == oracle)


def betti_splitting_hs(cw_graph, w, k, caps=None, check=True):
    """
    HS_k(J(G^pi)) = X_N[w] HS_k-1(J(G^pi - N[w])) + X_w HS_k(J(G^pi - w)) + X_N(w) HS_k(J(G^pi - N[w]))
    with every term from the Betti oracle

    :param cw_graph: CliqueWhiskeredGraph
    :param w: str, base vertex
    :param k: int, k >= 1
    :param caps: Caps
    :param check: bool, compare with hs_from_betti(J(G^pi), k)
    :return: MonomialIdeal over cw_graph.order
    """
    caps = resolve_caps(caps)
    if cw_graph.is_apex(w):
        module_logger.error('(%r) %s is an apex' % (cw_graph, w))
        raise PreconditionError('%s is an apex, a base vertex is required' % w)
    if k < 1:
        raise PreconditionError('the splitting needs k >= 1, got %i' % k)
    graph = cw_graph.graph
    variables = cw_graph.order
    closed = neighborhood(graph, w, closed=True)
    open_nbhd = neighborhood(graph, w)
    without_closed = cover_ideal(induced_delete(graph, closed), caps=caps, variables=variables)
    without_w = cover_ideal(induced_delete(graph, [w]), caps=caps, variables=variables)
    terms = [scale(hs_from_betti(without_closed, k - 1, caps=caps), Monomial.from_support(variables, closed)),
             scale(hs_from_betti(without_w, k, caps=caps), Monomial.from_support(variables, [w])),
             scale(hs_from_betti(without_closed, k, caps=caps), Monomial.from_support(variables, open_nbhd))]
    result = ideal_sum(*terms)
    if check:
        direct = hs_from_betti(cover_ideal(graph, caps=caps), k, caps=caps)
        if direct != result:
            module_logger.error('(%r) splitting at %s, k=%i: %s differs from %s' % (cw_graph, w, k, result, direct))
            raise HomShiftError('Betti splitting at %s, k=%i gives %s instead of %s' % (w, k, result, direct))
    return result


def _timed(func, *args, **kwargs):
    start = time.perf_counter()
    result = func(*args, **kwargs)
    return result, time.perf_counter() - start


def verify_counterexample(k, caps=None):
    """
    HS_k(J(G_k)) for the whiskered even cycle G_k = W(C_2k): closed form, generation degree 3k, regularity
    4k - 1, no linear resolution and no linear quotients

    :param k: int, k >= 2
    :param caps: Caps
    :return: TheoremReport
    """
    caps = resolve_caps(caps)
    if k < 2:
        module_logger.error('counterexample needs k >= 2, got %i' % k)
        raise PreconditionError('the whiskered cycle counterexample needs k >= 2, got %i' % k)
    cw_graph = whiskered_cycle(k)
    variables = cw_graph.order
    report = TheoremReport(subject='G_%i' % k)

    ideal, order = _lex_cover_order(cw_graph, caps)
    hs, seconds = _timed(linquot.hs_via_linear_quotients, ideal, order, k)
    route = 'linquot'
    # J(G_3) has 18 generators, its lcm lattice is out of reach of the oracle
    if k == 2:
        oracle, oracle_seconds = _timed(hs_from_betti, ideal, k, caps=caps)
        report = report.add_check('route_equality', oracle == hs,
                                  witness='oracle %s, linear quotients %s' % (oracle, hs), k=k, route='both',
                                  seconds=oracle_seconds + seconds)
        route = 'both'

    xs = Monomial.from_support(variables, ['x%i' % i for i in range(1, 2 * k + 1)])
    odd = Monomial.from_support(variables, ['y%i' % i for i in range(1, 2 * k + 1, 2)])
    even = Monomial.from_support(variables, ['y%i' % i for i in range(2, 2 * k + 1, 2)])
    expected = scale(MonomialIdeal(variables, [odd, even]), xs)
    report = report.add_check('closed_form', hs == expected, witness=str(hs), k=k, route=route, seconds=seconds)
    degrees = hs.degrees()
    report = report.add_check('generation_degree', degrees == [3 * k], witness=degrees, k=k, route=route)

    table, seconds = _timed(betti_table, hs, caps=caps)
    reg = table.regularity()
    report = report.add_check('regularity', reg == 4 * k - 1, witness=reg, k=k, route='oracle', seconds=seconds)
    linear = has_linear_resolution(hs, caps=caps, table=table)
    report = report.add_check('no_linear_resolution', not linear, witness='reg %i' % reg, k=k, route='oracle')

    order, seconds = _timed(linquot.find_order, hs, caps=caps)
    report = report.add_check('no_linear_quotients', order is None, witness=order, k=k, route='linquot',
                              seconds=seconds)
    module_logger.info('(G_%i) counterexample report: %s' % (k, 'passed' if report.passed else 'failed'))
    return report


def _check_cameron_walker(cw_graph):
    """
    Shape of a Cohen-Macaulay Cameron-Walker graph: a connected bipartite core H, a triangle {w, w', v} on each
    left vertex w with w' a leaf of the base, a leaf {w, v} on each right vertex, plus K_2 or K_3 components
    """
    base = remove_apexes(cw_graph)
    core = []
    for component in components(base):
        blocks = set(cw_graph.block_of(v) for v in component)
        if len(blocks) == 1 and len(component) <= 2:
            continue
        core.extend(component)
    if not core:
        raise PreconditionError('no Cameron-Walker core in %r' % cw_graph)
    left, right = [], []
    for clique, _ in cw_graph.blocks:
        if clique[0] not in core:
            continue
        if len(clique) == 1:
            right.append(clique[0])
        elif len(clique) == 2 and base.neighbors(clique[1]) == (clique[0],):
            left.append(clique[0])
        else:
            raise PreconditionError('block (%s) is neither a pendant triangle nor a leaf' % ', '.join(clique))
    hub = induced_delete(base, [v for v in base.vertices if v not in set(left) | set(right)])
    bipartite, _ = is_bipartite(hub)
    crossing = [e for e in hub.edges if (e[0] in left) == (e[1] in left)]
    if not left or not right or not bipartite or crossing or not is_connected(hub):
        raise PreconditionError('%r is not a Cohen-Macaulay Cameron-Walker graph' % cw_graph)


def _check_corona(cw_graph):
    for clique, _ in cw_graph.blocks:
        if len(clique) < 2:
            module_logger.error('(%r) clique (%s) has t_i = 1' % (cw_graph, ', '.join(clique)))
            raise PreconditionError('clique corona needs all t_i >= 2, block (%s) has t_i = 1' % ', '.join(clique))
        for w in clique[1:]:
            outside = [u for u in cw_graph.base.neighbors(w) if u not in clique]
            if outside:
                raise PreconditionError('%s has neighbors %s outside its clique' % (w, ', '.join(outside)))


def check_mode(cw_graph, mode):
    """
    :raise PreconditionError: when cw_graph does not have the structure the mode theorem is about
    """
    if mode not in MODES:
        raise PreconditionError('unknown mode %r, expected one of %s' % (mode, ', '.join(MODES)))
    if mode == 'chordal' and not is_chordal(remove_apexes(cw_graph)):
        raise PreconditionError('base graph of %r is not chordal' % cw_graph)
    if mode == 'cameron_walker':
        _check_cameron_walker(cw_graph)
    if mode == 'clique_corona':
        _check_corona(cw_graph)


def _outcome(result):
    """
    :param result: True, a LinearQuotientOrder or a falsy Witness
    :return: (passed, witness)
    """
    passed = bool(result)
    return passed, None if passed else result


def theorem_suite(cw_graph, mode='generic', caps=None, subject=None, seed=None):
    """
    Run every per-instance check for all 0 <= k <= pd(J(G^pi))

    :param cw_graph: CliqueWhiskeredGraph
    :param mode: str, one of MODES
    :param caps: Caps
    :param subject: str, report subject, default repr(cw_graph)
    :param seed: int or None, recorded in the report
    :return: TheoremReport
    """
    caps = resolve_caps(caps)
    check_mode(cw_graph, mode)
    subject = subject or repr(cw_graph)
    report = TheoremReport(subject=subject)

    def add(check, passed, witness=None, **kwargs):
        return report.add_check(check, passed, witness=witness, seed=seed, **kwargs)

    (ideal, order), seconds = _timed(_lex_cover_order, cw_graph, caps)
    report = add('lex_linear_quotients', True, route='linquot', seconds=seconds)

    base = set(cw_graph.base_vertices)
    bad_sets = [str(m) for m in order.sequence
                if set(order.set_of(m)) != set(linquot.set_formula(cw_graph, m.labels))]
    report = add('set_formula', not bad_sets, witness=bad_sets or None)
    bad_restriction = [str(m) for m in order.sequence if not base - set(m.labels) <= set(order.set_of(m))]
    report = add('cover_restriction', not bad_restriction, witness=bad_restriction or None)
    bad_apex = [list(cover) for cover in minimal_vertex_covers(cw_graph.graph, caps=caps)
                if not check_apex_count(cw_graph, cover)]
    report = add('apex_count', not bad_apex, witness=bad_apex or None)

    for w in cw_graph.base_vertices:
        report = add('w_partition', w_partition(cw_graph, w, caps=caps).holds, witness='split at %s' % w)

    use_oracle = len(ideal) <= caps.max_generators
    if use_oracle:
        table, seconds = _timed(betti_table, ideal, caps=caps)
        top = table.projective_dimension()
        report = add('betti_count', *_outcome(linquot.betti_count_check(order, table)), route='both',
                     seconds=seconds)
        mismatches = [str(a) for a in euler_check(ideal, caps=caps, table=table)]
        report = add('euler', not mismatches, witness=mismatches or None, route='oracle')
        off_lattice = [str(a) for a in off_lattice_spot_check(ideal, seed=DEFAULT_SEED if seed is None else seed,
                                                              caps=caps)]
        report = add('off_lattice', not off_lattice, witness=off_lattice or None, route='oracle')
    else:
        table = None
        top = order.max_set_size()

    for k in range(top + 1):
        products, seconds = _timed(linquot.hs_clique_whiskered, cw_graph, k, caps=caps)
        hs = linquot.hs_via_linear_quotients(ideal, order, k)
        report = add('discarded_products', True, witness=[str(m) for m in products.discarded] or None, k=k,
                     route='linquot', seconds=seconds)
        if use_oracle:
            oracle = table.hs(k)
            report = add('route_equality', oracle == hs and products.ideal == hs,
                         witness='oracle %s, linear quotients %s, covers %s' % (oracle, hs, products.ideal), k=k,
                         route='both')
        report = add('exchange', *_outcome(linquot.exchange_check(cw_graph, k, hs=hs)), k=k)
        if use_oracle and k >= 1:
            for w in cw_graph.base_vertices:
                splitting, seconds = _timed(betti_splitting_hs, cw_graph, w, k, caps=caps, check=False)
                report = add('betti_splitting', splitting == hs, witness='split at %s: %s' % (w, splitting), k=k,
                             route='oracle', seconds=seconds)

        if mode == 'chordal':
            chordal, seconds = _timed(linquot.chordal_hs_order, cw_graph, k, caps=caps)
            if chordal and chordal.ideal != hs:
                report = add('chordal_order', False, witness='chordal order lists %s' % chordal.ideal, k=k,
                             route='linquot', seconds=seconds)
            else:
                report = add('chordal_order', *_outcome(chordal), k=k, route='linquot', seconds=seconds)
            if chordal:
                report = add('star_condition', *_outcome(linquot.star_condition(cw_graph, chordal)), k=k)
        elif mode in ('cameron_walker', 'clique_corona'):
            wpm = linquot.is_weakly_polymatroidal(hs, cw_graph.order)
            report = add('weakly_polymatroidal', *_outcome(wpm), k=k)
            if wpm:
                lex = linquot.verify_order(hs, linquot.lex_order(hs, cw_graph.order))
                report = add('wpm_linear_quotients', *_outcome(lex), k=k, route='linquot')
    module_logger.info('(%s) %s suite: %i checks, %i failed' % (subject, mode, len(report), len(report.failures())))
    return report


def _suite_job(args):
    name, cw_graph, mode, caps, seed = args
    return theorem_suite(cw_graph, mode=mode, caps=caps, subject=name, seed=seed)


def run_suite(graphs, mode='generic', jobs=1, caps=None, seed=None):
    """
    :param graphs: list of (name, CliqueWhiskeredGraph)
    :param mode: str
    :param jobs: int, worker processes, the merged report does not depend on it
    :param caps: Caps
    :param seed: int or None, recorded in the reports
    :return: TheoremReport, merged by subject
    """
    caps = resolve_caps(caps)
    tasks = [(name, cw_graph, mode, caps, seed) for name, cw_graph in graphs]
    if jobs > 1 and len(tasks) > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as executor:
            reports = list(executor.map(_suite_job, tasks))
    else:
        reports = [_suite_job(task) for task in tasks]
    return TheoremReport.merge(reports, subject='%s suite' % mode)


def corona_dichotomy(caps=None):
    """
    Clique coronas with all t_i >= 2 keep linear quotients, the whiskered cycle C_4 (all t_i = 1) does not at k = 2

    :return: TheoremReport
    """
    caps = resolve_caps(caps)
    corona = clique_corona(complete_graph(['a', 'b']), [2, 2])
    suite = theorem_suite(corona, mode='clique_corona', caps=caps, subject='corona_k2_22')
    report = TheoremReport(subject='corona dichotomy')
    failed = suite.failures()
    report = report.add_check('corona_linear_quotients', suite.passed,
                              witness=None if suite.passed else list(failed.check), route='both')

    whiskered = clique_corona(cycle_graph(['x1', 'x2', 'x3', 'x4']), [1, 1, 1, 1], apex_labels=['y1', 'y2', 'y3', 'y4'])
    rejected = False
    try:
        check_mode(whiskered, 'clique_corona')
    except PreconditionError:
        rejected = True
    ideal = cover_ideal(whiskered.graph, caps=caps)
    hs = hs_from_betti(ideal, 2, caps=caps)
    order = linquot.find_order(hs, caps=caps)
    report = report.add_check('corona_whiskers_fail', rejected and order is None,
                              witness=order if order is not None else 'not rejected by the corona mode', k=2,
                              route='oracle')
    return TheoremReport.merge([report, suite], subject='corona dichotomy')
