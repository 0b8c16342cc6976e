#! /usr/bin/python3
# -*- coding: utf-8 -*-
"""
    shared fixtures: the small graphs most tests are about
"""

import pytest

from homshift.core.graph import Graph, clique_whisker, complete_graph, cycle_graph, path_graph, whiskered_cycle, \
    whiskered_graph
from homshift.core.monomial import MonomialIdeal
from homshift.tools.config import Caps

X4 = ('x1', 'x2', 'x3', 'x4')


@pytest.fixture
def k2():
    return complete_graph(['a', 'b'])


@pytest.fixture
def c4():
    return cycle_graph(list(X4))


@pytest.fixture
def g2():
    return whiskered_cycle(2)


@pytest.fixture
def triangle():
    """K_2 whiskered along the single clique {a, b}: the triangle a, b, v1"""
    return clique_whisker(complete_graph(['a', 'b']), [['a', 'b']])


@pytest.fixture
def whiskered_p3():
    return whiskered_graph(path_graph(['a', 'b', 'c']))


@pytest.fixture
def isolated():
    return Graph(['a'])


@pytest.fixture
def caps():
    return Caps()


@pytest.fixture
def two_squares():
    """<x1x3, x2x4> = J(C_4)"""
    return MonomialIdeal.parse(['x1x3', 'x2x4'], X4)
