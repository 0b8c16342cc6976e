#! /usr/bin/python3
# -*- coding: utf-8 -*-
"""
property/corpus.py contains the seeded random corpus of clique-whiskered graphs and the fixed family corpora
"""

import itertools
import logging

import numpy as np

from homshift.core.graph import Graph, clique_corona, clique_whisker, cm_cameron_walker, complete_graph, \
    cycle_graph, path_graph, whiskered_graph
from homshift.property.covers import minimal_vertex_covers
from homshift.tools import resolve_caps
from homshift.tools.config import DEFAULT_SEED
from homshift.tools.errors import PreconditionError

__status__ = "dev"
__all__ = ["random_clique_whiskered", "corpus", "chordal_corpus", "cameron_walker_corpus", "corona_corpus"]

module_logger = logging.getLogger(__name__)

MAX_ATTEMPTS = 1000


def _greedy_cliques(graph, permutation):
    """
    Each vertex, in permutation order, joins the first clique it is fully adjacent to, or opens a new one
    """
    cliques = []
    for i in permutation:
        v = graph.vertices[i]
        for clique in cliques:
            if all(graph.has_edge(v, u) for u in clique):
                clique.append(v)
                break
        else:
            cliques.append([v])
    return cliques


def random_clique_whiskered(rng, n_base, p=0.5):
    """
    :param rng: np.random.Generator
    :param n_base: int, number of base vertices
    :param p: float, edge probability
    :return: CliqueWhiskeredGraph with base vertices x1..xn and apexes v1..vt
    """
    labels = ['x%i' % i for i in range(1, n_base + 1)]
    pairs = list(itertools.combinations(labels, 2))
    keep = rng.random(len(pairs)) < p
    base = Graph(labels, [pair for pair, kept in zip(pairs, keep) if kept])
    cliques = _greedy_cliques(base, rng.permutation(n_base))
    return clique_whisker(base, cliques)


def corpus(n, seed=DEFAULT_SEED, max_base_vertices=5, caps=None):
    """
    Seeded random clique-whiskered graphs, resampled until J(G^pi) has at most caps.max_generators generators

    :param n: int, number of graphs
    :param seed: int
    :param max_base_vertices: int
    :param caps: Caps
    :return: list of (name, CliqueWhiskeredGraph)
    """
    caps = resolve_caps(caps)
    if max_base_vertices < 1:
        raise PreconditionError('max_base_vertices must be positive, got %i' % max_base_vertices)
    rng = np.random.default_rng(seed)
    graphs = []
    attempts = 0
    while len(graphs) < n:
        attempts += 1
        if attempts > MAX_ATTEMPTS * max(n, 1):
            raise PreconditionError('no corpus graph within %i generators after %i attempts'
                                    % (caps.max_generators, attempts))
        cw_graph = random_clique_whiskered(rng, int(rng.integers(1, max_base_vertices + 1)))
        if len(minimal_vertex_covers(cw_graph.graph, caps=caps)) > caps.max_generators:
            continue
        graphs.append(('random_%i_s%i' % (len(graphs) + 1, seed), cw_graph))
    module_logger.info('(seed %i) corpus of %i graphs after %i draws' % (seed, n, attempts))
    return graphs


def chordal_corpus():
    """
    :return: list of (name, CliqueWhiskeredGraph) with chordal base graphs
    """
    p3 = path_graph(['a', 'b', 'c'])
    k3 = complete_graph(['a', 'b', 'c'])
    paw = Graph(['a', 'b', 'c', 'd'], [('a', 'b'), ('b', 'c'), ('a', 'c'), ('c', 'd')])
    star = Graph(['c', 'a', 'b', 'd'], [('c', 'a'), ('c', 'b'), ('c', 'd')])
    return [('edge_one_clique', clique_whisker(complete_graph(['a', 'b']), [['a', 'b']])),
            ('whiskered_p3', whiskered_graph(p3)),
            ('p3_partition_ab_c', clique_whisker(p3, [['a', 'b'], ['c']])),
            ('k3_singletons', whiskered_graph(k3)),
            ('paw_partition_abc_d', clique_whisker(paw, [['a', 'b', 'c'], ['d']])),
            ('whiskered_p4', whiskered_graph(path_graph(['a', 'b', 'c', 'd']))),
            ('whiskered_star', whiskered_graph(star)),
            ('k3_one_clique', clique_whisker(k3, [['a', 'b', 'c']])),
            ('whiskered_k4', whiskered_graph(complete_graph(['a', 'b', 'c', 'd']))),
            ('p4_partition_ab_cd', clique_whisker(path_graph(['a', 'b', 'c', 'd']), [['a', 'b'], ['c', 'd']])),
            ('whiskered_p5', whiskered_graph(path_graph(['a', 'b', 'c', 'd', 'e'])))]


def cameron_walker_corpus():
    """
    :return: list of (name, CliqueWhiskeredGraph), Cohen-Macaulay Cameron-Walker graphs
    """
    edge = Graph(['a', 'b'], [('a', 'b')])
    cherry = Graph(['a', 'c', 'b'], [('a', 'b'), ('c', 'b')])
    fork = Graph(['a', 'b', 'c'], [('a', 'b'), ('a', 'c')])
    return [('cw_edge', cm_cameron_walker(edge, 1)),
            ('cw_cherry', cm_cameron_walker(cherry, 2)),
            ('cw_edge_k2', cm_cameron_walker(edge, 1, extra_components=[2])),
            ('cw_edge_k3', cm_cameron_walker(edge, 1, extra_components=[3])),
            ('cw_fork', cm_cameron_walker(fork, 1)),
            ('cw_fork_k2', cm_cameron_walker(fork, 1, extra_components=[2]))]


def corona_corpus():
    """
    :return: list of (name, CliqueWhiskeredGraph), clique coronas with all t_i >= 2
    """
    k2 = complete_graph(['a', 'b'])
    return [('corona_k1_3', clique_corona(Graph(['a']), [3])),
            ('corona_k2_22', clique_corona(k2, [2, 2])),
            ('corona_k2_32', clique_corona(k2, [3, 2])),
            ('corona_p3_222', clique_corona(path_graph(['a', 'b', 'c']), [2, 2, 2])),
            ('corona_c4_2222', clique_corona(cycle_graph(['a', 'b', 'c', 'd']), [2, 2, 2, 2]))]
