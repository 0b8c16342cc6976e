#! /usr/bin/python3
# -*- coding: utf-8 -*-
"""
property/covers.py contains functions to enumerate minimal vertex covers, build vertex cover ideals and check the
structure of minimal vertex covers of clique-whiskered graphs
"""

import collections
import logging

import pandas as pd

from homshift.core.graph import induced_delete, neighborhood
from homshift.core.monomial import Monomial, MonomialIdeal, ideal_sum, intersect, scale
from homshift.tools import check_cap, resolve_caps
from homshift.tools.errors import HomShiftError, PreconditionError

__status__ = "dev"
__all__ = ["CoverSet", "is_vertex_cover", "is_minimal_vertex_cover", "minimal_vertex_covers", "cover_ideal",
           "check_apex_count", "restrict_cover", "is_well_covered", "is_very_well_covered", "w_partition",
           "WPartition"]

module_logger = logging.getLogger(__name__)


class CoverSet:
    """
    All minimal vertex covers of a graph, lex-descending by X_C under the canonical vertex order
    """

    def __init__(self, graph, covers):
        """
        :param graph: Graph
        :param covers: iterable of collections of labels
        """
        self.graph = graph
        _covers = set(graph.sort(cover) for cover in covers)
        self.covers = tuple(sorted(_covers, key=lambda c: tuple(v in c for v in graph.vertices), reverse=True))

    def __len__(self):
        return len(self.covers)

    def __iter__(self):
        return iter(self.covers)

    def __getitem__(self, item):
        return self.covers[item]

    def __eq__(self, other):
        if not isinstance(other, CoverSet):
            return NotImplemented
        return self.graph == other.graph and self.covers == other.covers

    def sizes(self):
        return sorted(set(len(cover) for cover in self.covers))

    def ideal(self, variables=None):
        """
        :param variables:
            tuple of str, variable list containing the vertices, default the graph vertices
        :return: MonomialIdeal generated by X_C over the covers
        """
        if variables is None:
            variables = self.graph.vertices
        return MonomialIdeal(variables, [Monomial.from_support(variables, cover) for cover in self.covers])

    def to_frame(self):
        """
        :return: pd.DataFrame, one row per cover, one boolean column per vertex
        """
        frame = pd.DataFrame([[v in cover for v in self.graph.vertices] for cover in self.covers],
                             columns=list(self.graph.vertices), dtype=bool)
        frame.insert(0, 'size', [len(cover) for cover in self.covers])
        return frame


def is_vertex_cover(graph, labels):
    """
    :param graph: Graph
    :param labels: collection of vertex labels
    :return: True iff labels meet every edge
    """
    labels = set(labels)
    graph.check_vertices(labels)
    return all(a in labels or b in labels for a, b in graph.edges)


def is_minimal_vertex_cover(graph, labels):
    """
    A vertex cover is minimal iff every vertex of it has a neighbor outside of it
    """
    labels = set(labels)
    if not is_vertex_cover(graph, labels):
        return False
    return all(any(b not in labels for b in graph.neighbors(a)) for a in labels)


def _maximal_independent_sets(graph):
    """
    Bron-Kerbosch with pivoting on the complement graph, vertex sets as bitmasks
    """
    n = len(graph)
    full = (1 << n) - 1
    complement = [full & ~graph.masks[i] & ~(1 << i) for i in range(n)]
    found = []

    def expand(chosen, candidates, excluded):
        if not candidates and not excluded:
            found.append(chosen)
            return
        pool = candidates | excluded
        pivot = max((i for i in range(n) if pool >> i & 1),
                    key=lambda i: bin(candidates & complement[i]).count('1'))
        branch = candidates & ~complement[pivot]
        while branch:
            low = branch & -branch
            i = low.bit_length() - 1
            expand(chosen | low, candidates & complement[i], excluded & complement[i])
            candidates &= ~low
            excluded |= low
            branch &= ~low

    expand(0, full, 0)
    return found


def _covers_by_subsets(graph):
    """
    Direct filtering of all 2^n vertex subsets
    """
    n = len(graph)
    edges = [(1 << graph.index[a]) | (1 << graph.index[b]) for a, b in graph.edges]
    covers = [s for s in range(1 << n) if all(s & e for e in edges)]
    cover_set = set(covers)
    return [s for s in covers if not any(s & ~(1 << i) in cover_set for i in range(n) if s >> i & 1)]


def minimal_vertex_covers(graph, caps=None, method='mis'):
    """
    Enumerate all minimal vertex covers, as complements of the maximal independent sets

    :param graph: Graph
    :param caps: Caps, default from environment
    :param method:
        'mis' (default): branch and reduce enumeration of maximal independent sets
        'subsets': filter all vertex subsets, only for graphs with at most caps.max_subset_check vertices
    :return: CoverSet
    """
    caps = resolve_caps(caps)
    check_cap(len(graph), caps.max_vertices, 'number of vertices')
    full = (1 << len(graph)) - 1
    if method == 'mis':
        masks = [full & ~s for s in _maximal_independent_sets(graph)]
    elif method == 'subsets':
        check_cap(len(graph), caps.max_subset_check, 'number of vertices for subset enumeration')
        masks = _covers_by_subsets(graph)
    else:
        raise PreconditionError('unknown cover enumeration method %r' % method)
    cover_set = CoverSet(graph, [graph.labels(mask) for mask in masks])
    module_logger.debug('(%r) %i minimal vertex covers by %s' % (graph, len(cover_set), method))
    return cover_set


def cover_ideal(graph, caps=None, variables=None):
    """
    Vertex cover ideal J(G), generated by X_C over the minimal vertex covers C

    :param graph: Graph
    :param caps: Caps
    :param variables:
        tuple of str containing the vertices of graph, default the vertices of graph
    :return: MonomialIdeal
    """
    if variables is not None:
        missing = [v for v in graph.vertices if v not in set(variables)]
        if missing:
            raise PreconditionError('variables do not contain vertex %s' % ', '.join(missing))
    return minimal_vertex_covers(graph, caps=caps).ideal(variables)


def _check_minimal_cover(graph, cover):
    graph.check_vertices(cover)
    if not is_minimal_vertex_cover(graph, cover):
        module_logger.error('{%s} is not a minimal vertex cover' % ', '.join(cover))
        raise PreconditionError('{%s} is not a minimal vertex cover' % ', '.join(cover))


def check_apex_count(cw_graph, cover):
    """
    Every closed apex neighborhood N[v_i] meets a minimal vertex cover in exactly |N[v_i]| - 1 vertices

    :param cw_graph: CliqueWhiskeredGraph
    :param cover: collection of labels, a minimal vertex cover of cw_graph
    :return: bool
    """
    cover = set(cover)
    _check_minimal_cover(cw_graph.graph, cover)
    for clique, apex in cw_graph.blocks:
        closed = set(clique) | {apex}
        if len(closed & cover) != len(closed) - 1:
            module_logger.info('apex %s: |N[v] & C| = %i, expected %i' % (apex, len(closed & cover),
                                                                          len(closed) - 1))
            return False
    return True


def restrict_cover(cw_graph, w, cover):
    """
    For a minimal vertex cover C of G^pi minus w, C minus N(w) covers G^pi minus N[w]

    :param cw_graph: CliqueWhiskeredGraph
    :param w: str, base vertex
    :param cover: collection of labels, minimal vertex cover of G^pi minus w
    :return: tuple of labels, canonical order
    """
    graph = cw_graph.graph
    if cw_graph.is_apex(w):
        raise PreconditionError('%s is an apex, a base vertex is required' % w)
    _check_minimal_cover(induced_delete(graph, [w]), cover)
    open_nbhd = set(neighborhood(graph, w))
    restricted = graph.sort(set(cover) - open_nbhd)
    remainder = induced_delete(graph, neighborhood(graph, w, closed=True))
    if not is_vertex_cover(remainder, restricted):
        raise HomShiftError('{%s} does not cover G minus N[%s]' % (', '.join(restricted), w))
    return restricted


def is_well_covered(graph, caps=None):
    """
    :return: True iff all minimal vertex covers have the same size (J(G) equigenerated)
    """
    return len(minimal_vertex_covers(graph, caps=caps).sizes()) <= 1


def is_very_well_covered(graph, caps=None):
    """
    :return: True iff graph has no isolated vertex, is well covered, and its covers have |V|/2 vertices
    """
    if any(not graph.neighbors(v) for v in graph.vertices) or not len(graph):
        return False
    sizes = minimal_vertex_covers(graph, caps=caps).sizes()
    return len(sizes) == 1 and 2 * sizes[0] == len(graph)


WPartition = collections.namedtuple('WPartition', ['first', 'second', 'intersection', 'expected_intersection',
                                                   'ideal'])
WPartition.holds = property(lambda self: self.ideal == ideal_sum(self.first, self.second)
                            and self.intersection == self.expected_intersection)


def w_partition(cw_graph, w, caps=None):
    """
    Splitting of J(G^pi) at a base vertex w:
        J(G^pi) = X_w J(G^pi - w) + X_N(w) J(G^pi - N[w]),
    with intersection X_N[w] J(G^pi - N[w]).

    :param cw_graph: CliqueWhiskeredGraph
    :param w: str, base vertex
    :param caps: Caps
    :return: WPartition; WPartition.holds checks both identities
    """
    graph = cw_graph.graph
    if cw_graph.is_apex(w):
        raise PreconditionError('%s is an apex, a base vertex is required' % w)
    variables = cw_graph.order
    open_nbhd = neighborhood(graph, w)
    closed_nbhd = neighborhood(graph, w, closed=True)
    without_w = cover_ideal(induced_delete(graph, [w]), caps=caps, variables=variables)
    without_nbhd = cover_ideal(induced_delete(graph, closed_nbhd), caps=caps, variables=variables)
    first = scale(without_w, Monomial.from_support(variables, [w]))
    second = scale(without_nbhd, Monomial.from_support(variables, open_nbhd))
    return WPartition(first, second, intersect(first, second),
                      scale(without_nbhd, Monomial.from_support(variables, closed_nbhd)),
                      cover_ideal(graph, caps=caps))
