#! /usr/bin/python3
# -*- coding: utf-8 -*-
"""
    tests for homshift.property.resolution and homshift.core.betti
"""

import pytest

from homshift.core.monomial import Monomial, MonomialIdeal
from homshift.property.covers import cover_ideal
from homshift.property.resolution import SimplicialComplex, betti_table, euler_check, graded_betti, \
    has_linear_resolution, hs_from_betti, lcm_lattice, off_lattice_spot_check, projective_dimension, \
    reduced_homology_ranks, regularity, upper_koszul_complex
from homshift.tools.config import Caps
from homshift.tools.errors import CapExceededError, PreconditionError

X4 = ('x1', 'x2', 'x3', 'x4')
G2_VARIABLES = ('x1', 'y1', 'x2', 'y2', 'x3', 'y3', 'x4', 'y4')


def m(text, variables=X4):
    return Monomial.parse(text, variables)


def closed_form(variables=G2_VARIABLES):
    return MonomialIdeal.parse(['x1x2x3x4y1y3', 'x1x2x3x4y2y4'], variables)


def test_lcm_lattice(two_squares):
    assert lcm_lattice(two_squares) == [m('x1x3'), m('x2x4'), m('x1x2x3x4')]
    assert lcm_lattice(MonomialIdeal.parse(['x1'], X4)) == [m('x1')]


def test_lcm_lattice_whiskered_cycle(g2):
    ideal = cover_ideal(g2.graph)
    lattice = lcm_lattice(ideal)
    assert len(lattice) >= 7
    assert set(ideal.generators) <= set(lattice)
    top = Monomial.parse('x1x2x3x4y1y2y3y4', g2.order)
    assert lattice[-1] == top
    assert all(m.degree >= 4 for m in lattice)


def test_lcm_lattice_cap(g2):
    with pytest.raises(CapExceededError):
        lcm_lattice(cover_ideal(g2.graph), caps=Caps(max_generators=5))


def test_upper_koszul_complex(two_squares):
    complex_ = upper_koszul_complex(two_squares, m('x1x2x3x4'))
    assert complex_.contains((1, 3))
    assert complex_.contains((0, 2))
    assert not complex_.contains((0, 1))
    assert complex_.facets() == [(0, 2), (1, 3)]
    single = upper_koszul_complex(MonomialIdeal.parse(['x1'], X4), m('x1'))
    assert single.faces == {0: [()]}
    assert single.dimension == -1


def test_upper_koszul_complex_non_squarefree():
    ideal = MonomialIdeal.parse(['x1^2', 'x1x2'], X4)
    complex_ = upper_koszul_complex(ideal, m('x1^2x2'))
    assert complex_.contains((0,))
    assert complex_.contains((1,))
    assert not complex_.contains((0, 1))


def test_upper_koszul_complex_outside_ideal(two_squares):
    assert upper_koszul_complex(two_squares, m('x1x2')).is_void()
    assert reduced_homology_ranks(upper_koszul_complex(two_squares, m('x1x2'))) == {}


def test_reduced_homology_ranks():
    points = SimplicialComplex((0, 1), [(), (0,), (1,)])
    assert reduced_homology_ranks(points) == {-1: 0, 0: 1}
    square = SimplicialComplex((0, 1, 2, 3), [(), (0,), (1,), (2,), (3,), (0, 1), (1, 2), (2, 3), (0, 3)])
    assert reduced_homology_ranks(square)[1] == 1
    assert reduced_homology_ranks(square)[0] == 0
    simplex = SimplicialComplex((0, 1, 2), [(), (0,), (1,), (2,), (0, 1), (0, 2), (1, 2), (0, 1, 2)])
    assert simplex.cone_point() == 0
    assert set(reduced_homology_ranks(simplex).values()) == {0}
    assert reduced_homology_ranks(SimplicialComplex((), [()])) == {-1: 1}


def test_simplicial_complex_counts():
    square = SimplicialComplex((0, 1, 2, 3), [(), (0,), (1,), (2,), (3,), (0, 1), (1, 2), (2, 3), (0, 3)])
    assert square.f_vector() == {-1: 1, 0: 4, 1: 4}
    assert square.reduced_euler_characteristic() == -1 + 4 - 4
    assert square.dimension == 1
    assert square.cone_point() is None
    assert SimplicialComplex((), []).dimension is None


def test_betti_table_two_squares(two_squares):
    table = betti_table(two_squares)
    assert table.beta(0, m('x1x3')) == 1
    assert table.beta(0, m('x2x4')) == 1
    assert table.beta(1, m('x1x2x3x4')) == 1
    assert len(table) == 3
    assert projective_dimension(table) == 1
    assert regularity(table) == 3
    assert table.ideal == two_squares


def test_betti_table_beta_column_next_to_beta_method(two_squares, triangle):
    table = betti_table(two_squares)
    assert table.total(0) == 2
    assert table.total(1) == 1
    assert table.total(2) == 0
    assert list(table['beta']) == [1, 1, 1]
    assert betti_table(cover_ideal(triangle.graph)).total(1) == 2


def test_betti_table_single_variable():
    table = betti_table(MonomialIdeal.parse(['x1'], X4))
    assert len(table) == 1
    assert table.projective_dimension() == 0
    assert table.regularity() == 1


def test_betti_table_unit_ideal():
    assert betti_table(MonomialIdeal.unit(X4)).projective_dimension() == 0


def test_betti_table_zero_ideal():
    table = betti_table(MonomialIdeal.zero(X4))
    assert table.empty
    with pytest.raises(PreconditionError):
        table.projective_dimension()


def test_betti_table_triangle(triangle):
    ideal = cover_ideal(triangle.graph)
    table = betti_table(ideal)
    assert table.total(0) == 3
    assert table.total(1) == 2
    assert table.beta(1, Monomial.parse('abv1', triangle.order)) == 2
    assert table.is_linear()
    assert graded_betti(table).loc[1, 3] == 2


def test_betti_table_jobs_independent(triangle):
    ideal = cover_ideal(triangle.graph)
    assert betti_table(ideal, jobs=2).equals(betti_table(ideal))


def test_whiskered_cycle_oracle(g2):
    ideal = cover_ideal(g2.graph)
    table = betti_table(ideal)
    assert table.projective_dimension() >= 2
    assert table.hs(2) == closed_form()
    assert table.hs(0) == ideal
    assert has_linear_resolution(ideal, table=table)


def test_has_linear_resolution(two_squares):
    assert has_linear_resolution(MonomialIdeal.parse(['x1', 'x2'], X4))
    assert not has_linear_resolution(two_squares)
    assert not has_linear_resolution(closed_form())
    with pytest.raises(PreconditionError):
        has_linear_resolution(MonomialIdeal.parse(['x1', 'x2x3'], X4))
    with pytest.raises(PreconditionError):
        has_linear_resolution(MonomialIdeal.zero(X4))


def test_closed_form_regularity():
    assert betti_table(closed_form()).regularity() == 7


def test_hs_from_betti(two_squares):
    assert hs_from_betti(two_squares, 0) == two_squares
    assert hs_from_betti(two_squares, 1) == MonomialIdeal.parse(['x1x2x3x4'], X4)
    assert hs_from_betti(two_squares, 2).is_zero()
    assert hs_from_betti(MonomialIdeal.zero(X4), 1).is_zero()
    with pytest.raises(PreconditionError):
        hs_from_betti(two_squares, -1)


def test_euler_check(two_squares, triangle):
    assert euler_check(two_squares) == []
    assert euler_check(cover_ideal(triangle.graph)) == []


def test_off_lattice_spot_check(two_squares, whiskered_p3):
    assert off_lattice_spot_check(two_squares, samples=16, seed=1) == []
    assert off_lattice_spot_check(cover_ideal(whiskered_p3.graph), samples=16, seed=2) == []
    non_squarefree = MonomialIdeal.parse(['x1^2', 'x1x2', 'x2^3'], X4)
    assert off_lattice_spot_check(non_squarefree, samples=24, seed=3) == []
