#! /usr/bin/python3
# -*- coding: utf-8 -*-
"""
property/resolution.py contains the brute force Betti number oracle: lcm lattice closure, upper Koszul simplicial
complexes and their reduced homology over the rationals
"""

import concurrent.futures
import logging

import numpy as np
from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from homshift.core.betti import BettiTable
from homshift.core.monomial import Monomial, MonomialIdeal, lcm
from homshift.tools import check_cap, resolve_caps
from homshift.tools.errors import PreconditionError

__status__ = "dev"
__all__ = ["SimplicialComplex", "lcm_lattice", "upper_koszul_complex", "reduced_homology_ranks", "betti_table",
           "projective_dimension", "regularity", "has_linear_resolution", "hs_from_betti", "graded_betti",
           "euler_check", "off_lattice_spot_check"]

module_logger = logging.getLogger(__name__)


class SimplicialComplex:
    """
    Downward closed family of faces over a ground set of variable indices. Faces are sorted index tuples, stored
    by size; the void complex has no face at all, the irrelevant complex {()} only the empty face.
    """

    def __init__(self, ground, faces):
        """
        :param ground:
            tuple of int, variable indices
        :param faces:
            iterable of sorted tuples of int
        """
        self.ground = tuple(ground)
        by_size = {}
        for face in faces:
            by_size.setdefault(len(face), set()).add(tuple(face))
        self.faces = {size: sorted(by_size[size]) for size in sorted(by_size)}

    def __len__(self):
        return sum(len(faces) for faces in self.faces.values())

    def __repr__(self):
        return 'SimplicialComplex(%i faces over %i vertices)' % (len(self), len(self.ground))

    def is_void(self):
        return not self.faces

    @property
    def dimension(self):
        """
        :return: int, -1 for the irrelevant complex, None for the void one
        """
        if self.is_void():
            return None
        return max(self.faces) - 1

    def f_vector(self):
        """
        :return: dict, dimension -> number of faces, starting at -1
        """
        return {size - 1: len(faces) for size, faces in self.faces.items()}

    def facets(self):
        """
        :return: list of maximal faces
        """
        facets = []
        for size, faces in self.faces.items():
            larger = self.faces.get(size + 1, [])
            covered = set(sub for face in larger for sub in _boundary_faces(face))
            facets.extend(face for face in faces if face not in covered)
        return facets

    def contains(self, face):
        return tuple(sorted(face)) in set(self.faces.get(len(face), []))

    def cone_point(self):
        """
        :return: a vertex lying in every facet, None if there is none
        """
        if self.is_void():
            return None
        common = set(self.ground)
        for facet in self.facets():
            common &= set(facet)
            if not common:
                return None
        return min(common)

    def reduced_euler_characteristic(self):
        """
        sum over the faces of (-1)^dim, the empty face included
        """
        f_vector = self.f_vector()
        dims = np.array(list(f_vector.keys()), dtype=int)
        counts = np.array(list(f_vector.values()), dtype=int)
        return int(np.dot((-1) ** (dims % 2), counts))


def _boundary_faces(face):
    return [face[:i] + face[i + 1:] for i in range(len(face))]


def lcm_lattice(ideal, caps=None):
    """
    All distinct lcms of non-empty subsets of generators, by iterating lcm with the generators up to a fixpoint

    :param ideal: MonomialIdeal
    :param caps: Caps
    :return: list of Monomial, ascending degree then lex descending
    """
    caps = resolve_caps(caps)
    check_cap(len(ideal), caps.max_generators, 'number of generators')
    gens = ideal.generators
    lattice = set(gens)
    frontier = set(gens)
    while frontier:
        new = set(lcm(a, g) for a in frontier for g in gens) - lattice
        lattice |= new
        frontier = new
    module_logger.debug('(%s) lcm lattice with %i elements' % (ideal, len(lattice)))
    return sorted(lattice, key=lambda m: (m.degree, tuple(-e for e in m.dense)))


def upper_koszul_complex(ideal, a, caps=None):
    """
    K^a(I) = {sigma subset of supp(a) : x^a / x^sigma in I}

    :param ideal: MonomialIdeal
    :param a: Monomial, multidegree
    :param caps: Caps
    :return: SimplicialComplex over the support of a
    """
    caps = resolve_caps(caps)
    ground = tuple(a.support)
    gens = ideal.restrict(a)
    if not gens:
        return SimplicialComplex(ground, [])

    if a.squarefree:
        def member(face):
            rest = a.mask & ~sum(1 << idx for idx in face)
            return any(g.mask & ~rest == 0 for g in gens)
    else:
        top = np.array([a.exponent(idx) for idx in ground], dtype=int)
        bounds = np.array([[g.exponent(idx) for idx in ground] for g in gens], dtype=int)
        position = {idx: i for i, idx in enumerate(ground)}

        def member(face):
            rest = top.copy()
            rest[np.array([position[idx] for idx in face], dtype=int)] -= 1
            return bool((bounds <= rest).all(axis=1).any())

    faces = [()]
    level = [()]
    while level:
        following = []
        for face in level:
            start = ground.index(face[-1]) + 1 if face else 0
            for idx in ground[start:]:
                candidate = face + (idx,)
                if member(candidate):
                    following.append(candidate)
        faces.extend(following)
        check_cap(len(faces), caps.max_faces, 'number of faces of the Koszul complex at %s' % a)
        level = following
    return SimplicialComplex(ground, faces)


def _rank(rows, shape):
    """
    Exact rank of a sparse rational matrix given as {row: {column: value}}
    """
    if not rows or 0 in shape:
        return 0
    return DomainMatrix({i: {j: QQ(v) for j, v in row.items()} for i, row in rows.items()}, shape, QQ).rank()


def _boundary_rank(complex_, size):
    """
    Rank of the boundary map from faces of `size` vertices to faces of `size - 1` vertices
    """
    sources = complex_.faces.get(size, [])
    targets = complex_.faces.get(size - 1, [])
    if size == 0 or not sources or not targets:
        return 0
    position = {face: j for j, face in enumerate(targets)}
    rows = {}
    for i, face in enumerate(sources):
        rows[i] = {position[sub]: (-1) ** j for j, sub in enumerate(_boundary_faces(face))}
    return _rank(rows, (len(sources), len(targets)))


def reduced_homology_ranks(complex_, caps=None):
    """
    Reduced homology ranks over QQ, rank H_d = n_d - rank d_d - rank d_{d+1}

    :param complex_: SimplicialComplex
    :param caps: Caps
    :return: dict, dimension -> rank for every dimension from -1 to dim(complex_); empty for the void complex
    """
    caps = resolve_caps(caps)
    check_cap(len(complex_), caps.max_faces, 'number of faces')
    if complex_.is_void():
        return {}
    top = max(complex_.faces)
    if complex_.cone_point() is not None:
        return {size - 1: 0 for size in range(top + 1)}
    ranks = {size: _boundary_rank(complex_, size) for size in range(top + 2)}
    return {size - 1: len(complex_.faces.get(size, [])) - ranks[size] - ranks[size + 1]
            for size in range(top + 1)}


def _betti_at(ideal, a, caps):
    complex_ = upper_koszul_complex(ideal, a, caps=caps)
    return [(dim + 1, a, rank) for dim, rank in reduced_homology_ranks(complex_, caps=caps).items() if rank]


def betti_table(ideal, caps=None, jobs=1):
    """
    Multigraded Betti numbers beta_{k,a} = rank H_{k-1}(K^a(I)) for every a of the lcm lattice

    :param ideal: MonomialIdeal
    :param caps: Caps
    :param jobs:
        int, number of worker processes; the table does not depend on it
    :return: BettiTable
    """
    caps = resolve_caps(caps)
    lattice = lcm_lattice(ideal, caps=caps)
    entries = []
    if jobs > 1 and len(lattice) > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as executor:
            for found in executor.map(_betti_at, [ideal] * len(lattice), lattice, [caps] * len(lattice)):
                entries.extend(found)
    else:
        for a in lattice:
            entries.extend(_betti_at(ideal, a, caps))
    table = BettiTable.from_entries(entries, ideal)
    module_logger.info('(%s) Betti table with %i nonzero entries over %i multidegrees'
                       % (ideal, len(table), len(lattice)))
    return table


def projective_dimension(table):
    """
    :param table: BettiTable
    :return: int, largest homological index with a nonzero Betti number
    """
    return table.projective_dimension()


def regularity(table):
    """
    :param table: BettiTable
    :return: int, max over the entries of |a| - k
    """
    return table.regularity()


def has_linear_resolution(ideal, caps=None, table=None):
    """
    An equigenerated ideal has a linear resolution iff its regularity equals its generation degree

    :param ideal: MonomialIdeal, equigenerated
    :param caps: Caps
    :param table: BettiTable of ideal, computed when not given
    :return: bool
    """
    if ideal.is_zero() or not ideal.is_equigenerated():
        module_logger.error('(%s) linear resolution test needs an equigenerated ideal' % ideal)
        raise PreconditionError('ideal %s is not equigenerated' % ideal)
    if table is None:
        table = betti_table(ideal, caps=caps)
    return table.regularity() == ideal.generation_degree()


def hs_from_betti(ideal, k, caps=None, table=None):
    """
    k-th homological shift ideal, generated by x^a over the nonzero beta_{k,a}

    :param ideal: MonomialIdeal
    :param k: int, non-negative
    :param caps: Caps
    :param table: BettiTable of ideal, computed when not given
    :return: MonomialIdeal, the zero ideal for k > pd(I)
    """
    if k < 0:
        raise PreconditionError('homological index must be non-negative, got %i' % k)
    if ideal.is_zero():
        return MonomialIdeal.zero(ideal.variables)
    if table is None:
        table = betti_table(ideal, caps=caps)
    return table.hs(k)


def graded_betti(table):
    """
    :param table: BettiTable
    :return: pd.DataFrame, beta_{k,d}, rows k and columns total degree d
    """
    return table.graded()


def euler_check(ideal, caps=None, table=None):
    """
    At every lattice element a, sum_k (-1)^k beta_{k,a} + reduced Euler characteristic of K^a(I) = 0

    :return: list of Monomial, the multidegrees where the identity fails
    """
    caps = resolve_caps(caps)
    if table is None:
        table = betti_table(ideal, caps=caps)
    failures = []
    for a in lcm_lattice(ideal, caps=caps):
        rows = table[table.multidegree == a]
        alternating = int(np.dot((-1) ** (rows.k.to_numpy() % 2), rows['beta'].to_numpy()))
        chi = upper_koszul_complex(ideal, a, caps=caps).reduced_euler_characteristic()
        if alternating + chi != 0:
            module_logger.warning('(%s) Euler characteristic mismatch at %s' % (ideal, a))
            failures.append(a)
    return failures


def off_lattice_spot_check(ideal, samples=16, seed=None, caps=None):
    """
    Koszul homology at random multidegrees below lcm(G(I)) outside the lcm lattice must vanish

    :param ideal: MonomialIdeal
    :param samples: int, number of random multidegrees drawn
    :param seed: int, RNG seed
    :param caps: Caps
    :return: list of Monomial with nonzero homology, empty on success
    """
    caps = resolve_caps(caps)
    lattice = set(lcm_lattice(ideal, caps=caps))
    top = ideal.lcm_all().dense
    rng = np.random.default_rng(seed)
    failures = []
    checked = 0
    for _ in range(samples):
        exponents = rng.integers(0, np.array(top) + 1)
        a = Monomial(ideal.variables, {idx: int(e) for idx, e in enumerate(exponents) if e})
        if a in lattice:
            continue
        checked += 1
        ranks = reduced_homology_ranks(upper_koszul_complex(ideal, a, caps=caps), caps=caps)
        if any(ranks.values()):
            module_logger.warning('(%s) nonzero homology off the lcm lattice at %s' % (ideal, a))
            failures.append(a)
    module_logger.debug('(%s) %i off lattice multidegrees checked' % (ideal, checked))
    return failures
