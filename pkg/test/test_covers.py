#! /usr/bin/python3
# -*- coding: utf-8 -*-
"""
    tests for homshift.property.covers
"""

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from homshift.core.graph import Graph, induced_delete, neighborhood, path_graph
from homshift.core.monomial import MonomialIdeal
from homshift.property.covers import check_apex_count, cover_ideal, is_minimal_vertex_cover, is_vertex_cover, \
    is_very_well_covered, is_well_covered, minimal_vertex_covers, restrict_cover, w_partition
from homshift.tools.config import Caps
from homshift.tools.errors import CapExceededError, PreconditionError


@st.composite
def graphs(draw, max_vertices=7):
    n = draw(st.integers(min_value=0, max_value=max_vertices))
    labels = ['u%i' % i for i in range(n)]
    pairs = list(itertools.combinations(labels, 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(labels, [pair for pair, kept in zip(pairs, keep) if kept])


def test_is_vertex_cover(k2, c4):
    assert is_vertex_cover(k2, ['a'])
    assert not is_vertex_cover(c4, ['x1', 'x2'])
    assert is_vertex_cover(c4, c4.vertices)
    assert not is_minimal_vertex_cover(c4, c4.vertices)
    assert is_minimal_vertex_cover(c4, ['x2', 'x4'])


def test_minimal_vertex_covers(k2, c4):
    assert minimal_vertex_covers(c4).covers == (('x1', 'x3'), ('x2', 'x4'))
    assert minimal_vertex_covers(k2).covers == (('a',), ('b',))


def test_whiskered_cycle_covers(g2):
    cover_set = minimal_vertex_covers(g2.graph)
    assert len(cover_set) == 7
    assert cover_set.sizes() == [4]
    assert cover_set == minimal_vertex_covers(g2.graph, method='subsets')
    frame = cover_set.to_frame()
    assert list(frame.columns) == ['size'] + list(g2.order)
    assert (frame['size'] == 4).all()


def test_cover_ideal(k2, c4):
    x4 = ('x1', 'x2', 'x3', 'x4')
    assert cover_ideal(c4) == MonomialIdeal.parse(['x1x3', 'x2x4'], x4)
    assert cover_ideal(k2) == MonomialIdeal.parse(['a', 'b'], ('a', 'b'))
    assert cover_ideal(Graph(['a', 'b'])).is_unit()
    assert cover_ideal(k2, variables=('a', 'b', 'c')).variables == ('a', 'b', 'c')
    with pytest.raises(PreconditionError):
        cover_ideal(k2, variables=('a',))


def test_caps(c4):
    with pytest.raises(CapExceededError):
        minimal_vertex_covers(c4, caps=Caps(max_vertices=3))
    with pytest.raises(CapExceededError):
        minimal_vertex_covers(c4, caps=Caps(max_subset_check=3), method='subsets')
    with pytest.raises(PreconditionError):
        minimal_vertex_covers(c4, method='greedy')


def test_check_apex_count(g2, triangle):
    assert check_apex_count(g2, ['y1', 'x2', 'y3', 'x4'])
    assert check_apex_count(triangle, ['a', 'v1'])
    with pytest.raises(PreconditionError):
        check_apex_count(triangle, ['a', 'b', 'v1'])


def test_apex_count_over_all_covers(whiskered_p3):
    assert all(check_apex_count(whiskered_p3, cover) for cover in minimal_vertex_covers(whiskered_p3.graph))


def test_restrict_cover_triangle(triangle):
    assert restrict_cover(triangle, 'a', ['b']) == ()


def test_restrict_cover_whiskered_cycle(g2):
    graph = g2.graph
    remainder = induced_delete(graph, neighborhood(graph, 'x1', closed=True))
    for cover in minimal_vertex_covers(induced_delete(graph, ['x1'])):
        assert is_vertex_cover(remainder, restrict_cover(g2, 'x1', cover))
    with pytest.raises(PreconditionError):
        restrict_cover(g2, 'x1', ['y2'])
    with pytest.raises(PreconditionError):
        restrict_cover(g2, 'y1', ['x2', 'x4', 'y3'])


def test_well_covered(k2, c4, g2, isolated):
    assert is_well_covered(c4)
    assert not is_well_covered(path_graph(['a', 'b', 'c']))
    assert is_very_well_covered(g2.graph)
    assert is_very_well_covered(k2)
    assert not is_very_well_covered(isolated)


def test_w_partition(g2, triangle):
    split = w_partition(g2, 'x1')
    assert split.holds
    assert split.ideal == cover_ideal(g2.graph)
    assert w_partition(triangle, 'a').holds
    assert w_partition(triangle, 'a').intersection == MonomialIdeal.parse(['abv1'], triangle.order)
    with pytest.raises(PreconditionError):
        w_partition(g2, 'y1')


@settings(max_examples=60, deadline=None)
@given(graphs())
def test_enumeration_methods_agree(graph):
    by_mis = minimal_vertex_covers(graph)
    assert by_mis == minimal_vertex_covers(graph, method='subsets')
    assert all(is_minimal_vertex_cover(graph, cover) for cover in by_mis)


@settings(max_examples=60, deadline=None)
@given(graphs())
def test_cover_ideal_is_dual_to_independent_sets(graph):
    # complements of the covers are exactly the maximal independent sets
    for cover in minimal_vertex_covers(graph):
        rest = set(graph.vertices) - set(cover)
        assert not any(graph.has_edge(a, b) for a, b in itertools.combinations(rest, 2))
        assert all(any(graph.has_edge(v, u) for u in rest) for v in cover)
