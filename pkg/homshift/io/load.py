#!/usr/bin/python3
# -*- coding: utf-8 -*-
"""
    homshift.io.load.py : functions to read graphs, clique-whiskered graphs and monomial ideals from JSON files
"""

import json
import logging
import os

from homshift.core.graph import Graph, clique_whisker, from_roles
from homshift.core.monomial import Monomial, MonomialIdeal
from homshift.tools import isint
from homshift.tools.errors import HomShiftError, ParseError

__all__ = ["read_json", "graph_from_dict", "monomial_from_obj", "ideal_from_dict", "load", "loads"]

logger = logging.getLogger(__name__)


def read_json(path):
    """
    :param path:
        str, path to an UTF-8 JSON file
    :return: the decoded JSON value
    """
    if not os.path.isfile(path):
        logger.error('(%s) file not found' % path)
        raise ParseError('file not found: %s' % path)
    try:
        with open(path, encoding='utf-8') as f:
            data = json.load(f)
    except (UnicodeDecodeError, json.JSONDecodeError) as err:
        logger.error('(%s) malformed JSON: %s' % (path, err))
        raise ParseError('malformed JSON in %s: %s' % (path, err)) from err
    logger.debug('(%s) JSON file read' % path)
    return data


def _require(data, key, kind):
    if not isinstance(data, dict) or key not in data:
        raise ParseError('%s JSON needs a "%s" entry' % (kind, key))
    return data[key]


def graph_from_dict(data):
    """
    Graph JSON {"vertices": [...], "edges": [[a, b], ...]}; with "roles" the clique-whiskered graph is rebuilt
    from its role tags, with "cliques" the graph is clique-whiskered along that partition

    :param data: dict
    :return: Graph or CliqueWhiskeredGraph
    """
    vertices = _require(data, 'vertices', 'graph')
    edges = _require(data, 'edges', 'graph')
    if not isinstance(vertices, list) or not isinstance(edges, list):
        raise ParseError('graph JSON: "vertices" and "edges" must be lists')
    try:
        graph = Graph(vertices, [tuple(edge) for edge in edges])
        if 'roles' in data:
            return from_roles(graph, data['roles'])
        if 'cliques' in data:
            return clique_whisker(graph, data['cliques'], apex_labels=data.get('apexes'))
    except TypeError as err:
        raise ParseError('graph JSON: %s' % err) from err
    return graph


def monomial_from_obj(obj, variables):
    """
    :param obj:
        dict {label: exponent} or str 'x1x3', 'x1^2x3'
    :param variables: tuple of str
    :return: Monomial
    """
    if isinstance(obj, str):
        return Monomial.parse(obj, variables)
    if isinstance(obj, dict):
        if not all(isint(e) for e in obj.values()):
            raise ParseError('monomial exponents must be integers: %r' % (obj,))
        return Monomial.from_labels(variables, obj)
    raise ParseError('cannot read a monomial from %r' % (obj,))


def ideal_from_dict(data):
    """
    Ideal JSON {"variables": [...], "generators": [{"x1": 1, "x3": 1}, "x2x4", ...]}

    :param data: dict
    :return: MonomialIdeal
    """
    variables = _require(data, 'variables', 'ideal')
    generators = _require(data, 'generators', 'ideal')
    if not isinstance(variables, list) or not all(isinstance(v, str) and v for v in variables):
        raise ParseError('ideal JSON: "variables" must be a list of non-empty strings')
    if len(set(variables)) != len(variables):
        raise ParseError('ideal JSON: duplicate variable')
    if not isinstance(generators, list):
        raise ParseError('ideal JSON: "generators" must be a list')
    variables = tuple(variables)
    return MonomialIdeal(variables, [monomial_from_obj(g, variables) for g in generators])


def loads(data):
    """
    :param data: decoded JSON value
    :return: MonomialIdeal, Graph or CliqueWhiskeredGraph depending on the keys present
    """
    if isinstance(data, dict) and 'generators' in data:
        return ideal_from_dict(data)
    if isinstance(data, dict) and 'vertices' in data:
        return graph_from_dict(data)
    raise ParseError('JSON is neither a graph nor an ideal')


def load(path):
    """
    :param path: str, JSON file
    :return: MonomialIdeal, Graph or CliqueWhiskeredGraph
    """
    data = read_json(path)
    try:
        obj = loads(data)
    except HomShiftError as err:
        logger.error('(%s) invalid content: %s' % (path, err))
        raise
    logger.info('(%s) %s loaded' % (path, type(obj).__name__))
    return obj
