#!/usr/bin/python3
# -*- coding: utf-8 -*-
"""
    homshift.io.export.py : JSON, CSV and DOT renderings of graphs, ideals, Betti tables, orders and reports
"""

import json
import logging

import pandas as pd

from homshift.core.graph import CliqueWhiskeredGraph
from homshift.core.monomial import divides
from homshift.property.resolution import lcm_lattice

__all__ = ["graph_to_dict", "ideal_to_dict", "covers_to_dict", "betti_to_dict", "betti_to_frame", "order_to_dict",
           "report_to_dict", "dumps", "to_csv", "lcm_lattice_dot"]

logger = logging.getLogger(__name__)


def graph_to_dict(graph):
    """
    :param graph: Graph or CliqueWhiskeredGraph
    :return: dict, graph JSON; a clique-whiskered graph carries its roles and cliques
    """
    if isinstance(graph, CliqueWhiskeredGraph):
        data = graph_to_dict(graph.graph)
        data['roles'] = {v: list(role) for v, role in graph.roles.items()}
        data['cliques'] = [list(clique) for clique in graph.partition]
        return data
    return {'vertices': list(graph.vertices), 'edges': [list(edge) for edge in graph.edges]}


def ideal_to_dict(ideal):
    return {'variables': list(ideal.variables), 'generators': [g.as_dict() for g in ideal.generators]}


def covers_to_dict(cover_set, ideal=None):
    """
    :param cover_set: CoverSet
    :param ideal: MonomialIdeal, default the cover ideal over the graph vertices
    :return: dict {"covers": [...], "ideal": ideal JSON}
    """
    ideal = cover_set.ideal() if ideal is None else ideal
    return {'covers': [list(cover) for cover in cover_set], 'ideal': ideal_to_dict(ideal)}


def betti_to_dict(table):
    """
    :param table: BettiTable
    :return: dict {"entries": [{"k", "multidegree", "beta"}, ...], "pd": r, "reg": rho}
    """
    entries = [{'k': int(row.k), 'multidegree': row.multidegree.as_dict(), 'beta': int(row.beta)}
               for row in table.itertuples()]
    data = {'entries': entries, 'pd': None, 'reg': None}
    if len(table):
        data['pd'] = table.projective_dimension()
        data['reg'] = table.regularity()
    return data


def betti_to_frame(table):
    """
    :return: pd.DataFrame with columns k, |a|, a, beta; a as a monomial string
    """
    return pd.DataFrame({'k': table.k.to_numpy(), '|a|': table.degree.to_numpy(),
                         'a': [str(a) for a in table.multidegree], 'beta': table['beta'].to_numpy()})


def order_to_dict(order):
    """
    :param order: LinearQuotientOrder or a failure Witness
    :return: dict, order JSON or failure JSON
    """
    if order is None:
        return {'sequence': None}
    if not order:
        data = order.to_dict()
        data['failure'] = type(order).__name__
        return data
    return order.to_dict()


def _witness(value):
    if value is None or isinstance(value, (bool, int, float, str)):
        return value
    if hasattr(value, 'to_dict'):
        return value.to_dict()
    if isinstance(value, (list, tuple)):
        return [_witness(item) for item in value]
    return str(value)


def report_to_dict(report):
    """
    :param report: TheoremReport
    :return: dict {"subject", "passed", "checks": [...]}
    """
    checks = []
    for row in report.itertuples(index=False):
        checks.append({'subject': row.subject, 'check': row.check,
                       'k': None if pd.isna(row.k) else int(row.k), 'passed': bool(row.passed),
                       'witness': _witness(row.witness), 'route': row.route, 'seconds': round(float(row.seconds), 6),
                       'seed': None if pd.isna(row.seed) else int(row.seed)})
    return {'subject': report.subject, 'passed': report.passed, 'checks': checks}


def dumps(data):
    return json.dumps(data, indent=2, ensure_ascii=False)


def to_csv(frame):
    """
    :param frame: pd.DataFrame
    :return: str, CSV text without index
    """
    frame = pd.DataFrame(frame)
    if 'witness' in frame:
        frame['witness'] = [json.dumps(_witness(w)) if w is not None else '' for w in frame['witness']]
    return frame.to_csv(index=False)


def lcm_lattice_dot(ideal, caps=None):
    """
    Hasse diagram of the lcm lattice (covering relations of divisibility) as DOT text

    :param ideal: MonomialIdeal
    :param caps: Caps
    :return: str
    """
    lattice = lcm_lattice(ideal, caps=caps)
    names = {a: 'n%i' % i for i, a in enumerate(lattice)}
    generators = set(ideal.generators)
    lines = ['digraph lcm_lattice {', '  rankdir=BT;']
    for a in lattice:
        shape = 'box' if a in generators else 'ellipse'
        lines.append('  %s [label="%s", shape=%s];' % (names[a], a, shape))
    for a in lattice:
        above = [b for b in lattice if b != a and divides(a, b)]
        for b in above:
            if not any(c != b and divides(c, b) for c in above if c != b and divides(a, c)):
                lines.append('  %s -> %s;' % (names[a], names[b]))
    lines.append('}')
    logger.debug('(%s) lcm lattice DOT with %i nodes' % (ideal, len(lattice)))
    return '\n'.join(lines) + '\n'
