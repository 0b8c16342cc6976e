#! /usr/bin/python3
# -*- coding: utf-8 -*-
"""
    tests for homshift.core.monomial
"""

import pickle

import pytest
from hypothesis import given, strategies as st

from homshift.core.monomial import EQUAL, GREATER, LESS, Monomial, MonomialIdeal, colon_by_monomial, divides, \
    equals, ideal_sum, intersect, lcm, lex_compare, minimalize, product, quotient, scale
from homshift.tools.errors import ParseError, PreconditionError, UniverseError

X4 = ('x1', 'x2', 'x3', 'x4')


def m(text, variables=X4):
    return Monomial.parse(text, variables)


def ideal(texts, variables=X4):
    return MonomialIdeal.parse(texts, variables)


exponents = st.lists(st.integers(min_value=0, max_value=3), min_size=4, max_size=4)


def monomial_of(values):
    return Monomial(X4, dict(enumerate(values)))


def test_parse_and_print():
    assert str(m('x1^2x3')) == 'x1^2x3'
    assert m('x3x1').as_dict() == {'x1': 1, 'x3': 1}
    assert m('x1*x1').as_dict() == {'x1': 2}
    assert m('1').is_one()
    assert str(Monomial.one(X4)) == '1'
    with pytest.raises(ParseError):
        m('x5')


def test_parse_longest_name_first():
    variables = tuple('x%i' % i for i in range(1, 12))
    assert Monomial.parse('x11x1', variables).labels == ('x1', 'x11')


def test_parse_backtracks_on_prefix_names():
    assert Monomial.parse('abc', ('a', 'ab', 'bc')).as_dict() == {'a': 1, 'bc': 1}
    assert Monomial.parse('ab^2bc', ('a', 'ab', 'bc')).as_dict() == {'ab': 2, 'bc': 1}
    assert Monomial.parse('x111x1', ('x1', 'x11', 'x111')).as_dict() == {'x1': 1, 'x111': 1}
    with pytest.raises(ParseError):
        Monomial.parse('abcd', ('a', 'ab', 'bc'))


def test_constructors():
    assert Monomial.from_support(X4, ['x2', 'x4']) == m('x2x4')
    assert Monomial.from_mask(X4, 0b0101) == m('x1x3')
    with pytest.raises(UniverseError):
        Monomial.from_labels(X4, {'y1': 1})
    with pytest.raises(PreconditionError):
        Monomial(X4, {0: -1})


def test_derived_fields():
    u = m('x1^2x3')
    assert u.degree == 3
    assert u.support == (0, 2)
    assert not u.squarefree
    assert m('x2').is_variable()
    assert list(u.vector(['x3', 'x2', 'x1', 'x4'])) == [1, 0, 2, 0]


def test_lcm():
    assert lcm(m('x1x3'), m('x2x4')) == m('x1x2x3x4')
    assert lcm(m('x1x3'), m('x1x3')) == m('x1x3')
    assert lcm(m('x1^2x2'), m('x1x2^3')) == m('x1^2x2^3')


def test_divides():
    assert divides(Monomial.one(X4), m('x2'))
    assert not divides(m('x1'), m('x2'))
    assert divides(m('x1x2'), m('x1x2x3'))
    assert not divides(m('x1^2'), m('x1x2'))


def test_quotient():
    assert quotient(m('x1^2x2'), m('x1')) == m('x1x2')
    assert m('x1x2') / m('x2') == m('x1')
    with pytest.raises(PreconditionError):
        quotient(m('x1'), m('x2'))


def test_universe_mismatch():
    with pytest.raises(UniverseError):
        lcm(m('x1'), Monomial.parse('x1', ('x1', 'x2')))
    with pytest.raises(UniverseError):
        MonomialIdeal(X4, [Monomial.parse('x1', ('x1',))])


def test_minimalize():
    assert minimalize([m('x1'), m('x1x2')]) == ideal(['x1'])
    assert minimalize([m('x1x3'), m('x2x4')]).generators == (m('x1x3'), m('x2x4'))
    assert minimalize([], variables=X4).is_zero()
    with pytest.raises(PreconditionError):
        minimalize([])


def test_colon_by_monomial():
    assert colon_by_monomial(ideal(['x1x3']), m('x2x4')) == ideal(['x1x3'])
    assert colon_by_monomial(ideal(['x1x2']), m('x2x3')) == ideal(['x1'])
    assert colon_by_monomial(ideal(['x1x3', 'x2x4']), m('x1x2')) == ideal(['x3', 'x4'])


def test_scale_sum_equals():
    variables = ('x1', 'x2', 'x3', 'x4', 'y1', 'y2', 'y3', 'y4')
    closed_form = scale(ideal(['y1y3', 'y2y4'], variables), Monomial.parse('x1x2x3x4', variables))
    assert closed_form == ideal(['x1x2x3x4y1y3', 'x1x2x3x4y2y4'], variables)
    some = ideal(['x1x3', 'x2'])
    assert ideal_sum(some, MonomialIdeal.zero(X4)) == some
    assert equals(ideal(['x1', 'x1x2']), ideal(['x1']))
    assert some + ideal(['x1']) == ideal(['x1', 'x2'])


def test_intersect_and_product():
    assert intersect(ideal(['x1']), ideal(['x2'])) == ideal(['x1x2'])
    assert intersect(ideal(['x1x2', 'x3']), ideal(['x2'])) == ideal(['x1x2', 'x2x3'])
    assert product(ideal(['x1', 'x2']), ideal(['x1'])) == ideal(['x1^2', 'x1x2'])
    assert ideal(['x1']) * m('x2') == ideal(['x1x2'])


def test_lex_compare():
    assert lex_compare(m('x1x3'), m('x2x4')) == GREATER
    assert lex_compare(m('x1x3'), m('x1x3')) == EQUAL
    assert lex_compare(m('x1x2'), m('x1x3')) == GREATER
    assert lex_compare(m('x1x2'), m('x1x3'), order=['x3', 'x2', 'x1', 'x4']) == LESS
    assert m('x2x4') < m('x1x3')
    with pytest.raises(UniverseError):
        lex_compare(m('x1'), m('x2'), order=['x1', 'x2'])


def test_ideal_basics():
    unit = MonomialIdeal.unit(X4)
    assert unit.is_unit() and not unit.is_zero()
    assert MonomialIdeal.zero(X4).is_zero()
    some = ideal(['x1x3', 'x2x4'])
    assert some.contains(m('x1x2x3'))
    assert not some.contains(m('x1x2'))
    assert some.is_generator(m('x2x4'))
    assert some.generation_degree() == 2
    assert some.lcm_all() == m('x1x2x3x4')
    assert some.restrict(m('x1x2x3')) == (m('x1x3'),)
    assert some.sorted(['x4', 'x3', 'x2', 'x1']) == [m('x2x4'), m('x1x3')]
    with pytest.raises(PreconditionError):
        ideal(['x1', 'x2x3']).generation_degree()


def test_pickle_keeps_hash():
    u = m('x1^2x3')
    assert hash(pickle.loads(pickle.dumps(u))) == hash(u)
    assert pickle.loads(pickle.dumps(ideal(['x1x3', 'x2x4']))) == ideal(['x1x3', 'x2x4'])


@given(exponents, exponents)
def test_lcm_laws(a, b):
    u, v = monomial_of(a), monomial_of(b)
    w = lcm(u, v)
    assert w == lcm(v, u)
    assert divides(u, w) and divides(v, w)
    assert w.degree <= u.degree + v.degree


@given(exponents, exponents)
def test_product_quotient(a, b):
    u, v = monomial_of(a), monomial_of(b)
    assert quotient(u * v, v) == u
    assert divides(v, u * v)


@given(exponents, exponents)
def test_lex_is_antisymmetric(a, b):
    u, v = monomial_of(a), monomial_of(b)
    assert lex_compare(u, v) == -lex_compare(v, u)
    assert (lex_compare(u, v) == EQUAL) == (u == v)


@given(st.lists(exponents, min_size=1, max_size=6))
def test_minimal_generators_are_antichain(values):
    gens = [monomial_of(a) for a in values]
    result = minimalize(gens)
    for g in result.generators:
        assert not any(h != g and divides(h, g) for h in result.generators)
    for g in gens:
        assert result.contains(g)
