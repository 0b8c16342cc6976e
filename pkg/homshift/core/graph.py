#! /usr/bin/python3
# -*- coding: utf-8 -*-
"""
    homshift.core.graph.py : finite simple graphs, clique-whiskered graphs and the graph families built on them
"""

import itertools
import logging

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from homshift.tools.errors import GraphError

__comment__ = "graph.py contains class Graph(), CliquePartition() and CliqueWhiskeredGraph(), with the constructors " \
              "of whiskered cycles, Cameron-Walker graphs and clique corona graphs"

__all__ = ["Graph", "CliquePartition", "CliqueWhiskeredGraph", "build_graph", "induced_delete", "neighborhood",
           "is_clique", "simplicial_vertices", "is_chordal", "is_bipartite", "components", "is_connected",
           "disjoint_union", "cycle_graph", "path_graph", "complete_graph", "clique_whisker", "whiskered_graph",
           "whiskered_cycle", "cm_cameron_walker", "clique_corona", "remove_apexes", "from_roles"]

logger = logging.getLogger(__name__)


class Graph:
    """
    Finite simple graph on string labels. The declared vertex order is canonical and drives every iteration.
    """

    def __init__(self, vertices, edges=()):
        """
        :param vertices:
            sequence of str, vertex labels, unique
        :param edges:
            iterable of label pairs
        """
        vertices = tuple(vertices)
        for v in vertices:
            if not isinstance(v, str) or not v:
                raise GraphError('vertex label %r is not a non-empty string' % (v,))
        if len(set(vertices)) != len(vertices):
            duplicate = sorted(v for v in set(vertices) if vertices.count(v) > 1)
            logger.error('duplicate vertex label: %s' % ', '.join(duplicate))
            raise GraphError('duplicate vertex label: %s' % ', '.join(duplicate))
        self.vertices = vertices
        self.index = {v: i for i, v in enumerate(vertices)}

        _edges = set()
        for edge in edges:
            edge = tuple(edge)
            if len(edge) != 2:
                raise GraphError('edge %r does not have two endpoints' % (edge,))
            a, b = edge
            for end in edge:
                if end not in self.index:
                    logger.error('edge %r: unknown endpoint %r' % (edge, end))
                    raise GraphError('edge %r: unknown endpoint %r' % (edge, end))
            if a == b:
                raise GraphError('loop at vertex %r' % a)
            _edges.add((a, b) if self.index[a] < self.index[b] else (b, a))
        self.edges = tuple(sorted(_edges, key=lambda e: (self.index[e[0]], self.index[e[1]])))

        n = len(vertices)
        self.adjacency = np.zeros((n, n), dtype=bool)
        for a, b in self.edges:
            self.adjacency[self.index[a], self.index[b]] = True
            self.adjacency[self.index[b], self.index[a]] = True
        self._masks = None

    def __len__(self):
        return len(self.vertices)

    def __contains__(self, v):
        return v in self.index

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.vertices == other.vertices and set(self.edges) == set(other.edges)

    def __hash__(self):
        return hash((self.vertices, frozenset(self.edges)))

    def __repr__(self):
        return 'Graph(%i vertices, %i edges)' % (len(self.vertices), len(self.edges))

    @property
    def n_edges(self):
        return len(self.edges)

    def has_edge(self, a, b):
        return bool(self.adjacency[self.index[a], self.index[b]])

    def neighbors(self, a):
        """
        :return: tuple of the neighbors of a, in canonical order
        """
        self.check_vertices([a])
        return tuple(self.vertices[i] for i in np.flatnonzero(self.adjacency[self.index[a]]))

    def check_vertices(self, labels):
        unknown = [v for v in labels if v not in self.index]
        if unknown:
            logger.error('unknown vertex: %s' % ', '.join(map(str, unknown)))
            raise GraphError('unknown vertex: %s' % ', '.join(map(str, unknown)))

    def sort(self, labels):
        """
        :return: tuple of labels in canonical order
        """
        return tuple(sorted(labels, key=self.index.__getitem__))

    # bitmask view, vertex i is bit i
    @property
    def masks(self):
        """
        :return: list of int, bitmask of the neighborhood of each vertex
        """
        if self._masks is None:
            self._masks = [sum(1 << int(j) for j in np.flatnonzero(row)) for row in self.adjacency]
        return self._masks

    def mask(self, labels):
        self.check_vertices(labels)
        return sum(1 << self.index[v] for v in set(labels))

    def labels(self, mask):
        return tuple(v for i, v in enumerate(self.vertices) if mask >> i & 1)


class CliquePartition:
    """
    Disjoint cliques A_1, ..., A_t covering the vertex set
    """

    def __init__(self, cliques):
        self.cliques = tuple(tuple(clique) for clique in cliques)

    def __len__(self):
        return len(self.cliques)

    def __iter__(self):
        return iter(self.cliques)

    def __eq__(self, other):
        if not isinstance(other, CliquePartition):
            return NotImplemented
        return self.cliques == other.cliques

    def __repr__(self):
        return 'CliquePartition(%s)' % ' | '.join(','.join(clique) for clique in self.cliques)

    def validate(self, graph):
        """
        :param graph: Graph
        :raise GraphError: if the cliques are not disjoint, do not cover the vertices or are not cliques
        """
        seen = []
        for clique in self.cliques:
            if not clique:
                raise GraphError('empty clique in partition')
            graph.check_vertices(clique)
            seen.extend(clique)
            if not is_clique(graph, clique):
                logger.error('(%s) does not induce a complete subgraph' % ', '.join(clique))
                raise GraphError('(%s) does not induce a complete subgraph' % ', '.join(clique))
        if len(seen) != len(set(seen)):
            raise GraphError('cliques of the partition are not disjoint')
        missing = [v for v in graph.vertices if v not in set(seen)]
        if missing:
            raise GraphError('partition does not cover vertex: %s' % ', '.join(missing))


class CliqueWhiskeredGraph:
    """
    Clique-whiskered graph G^pi: the base graph G plus one apex v_i per clique A_i, joined to all of A_i.

    Block i is (A_i, v_i) with A_i = (w_i1, ..., w_ir_i). The vertices of `graph` are declared in the total order
    w_11 > w_12 > ... > w_1r_1 > v_1 > w_21 > ... > v_t, so the canonical order of `graph` is that order.
    """

    def __init__(self, base, blocks):
        """
        :param base:
            Graph, the base graph G
        :param blocks:
            sequence of (clique, apex): clique a sequence of base labels, apex a fresh label
        """
        self.base = base
        self.blocks = tuple((tuple(clique), apex) for clique, apex in blocks)
        CliquePartition([clique for clique, _ in self.blocks]).validate(base)

        apexes = [apex for _, apex in self.blocks]
        collision = [apex for apex in apexes if apex in base.index]
        if collision or len(set(apexes)) != len(apexes):
            logger.error('apex label collision: %s' % ', '.join(collision or apexes))
            raise GraphError('apex label collision: %s' % ', '.join(collision or apexes))

        order = [v for clique, apex in self.blocks for v in clique + (apex,)]
        edges = list(base.edges) + [(apex, w) for clique, apex in self.blocks for w in clique]
        self.graph = Graph(order, edges)

        self.roles = {}
        for i, (clique, apex) in enumerate(self.blocks, start=1):
            for j, w in enumerate(clique, start=1):
                self.roles[w] = ('w', i, j)
            self.roles[apex] = ('v', i)

    @property
    def order(self):
        return self.graph.vertices

    @property
    def apexes(self):
        return tuple(apex for _, apex in self.blocks)

    @property
    def base_vertices(self):
        return tuple(v for v in self.order if self.roles[v][0] == 'w')

    @property
    def partition(self):
        return CliquePartition([clique for clique, _ in self.blocks])

    def __len__(self):
        return len(self.graph)

    def __eq__(self, other):
        if not isinstance(other, CliqueWhiskeredGraph):
            return NotImplemented
        return self.graph == other.graph and self.blocks == other.blocks

    def __hash__(self):
        return hash((self.graph, self.blocks))

    def __repr__(self):
        return 'CliqueWhiskeredGraph(%s)' % ' | '.join('%s;%s' % (','.join(clique), apex)
                                                      for clique, apex in self.blocks)

    def is_apex(self, v):
        self.graph.check_vertices([v])
        return self.roles[v][0] == 'v'

    def block_of(self, v):
        """
        :return: int, 0-based index of the block containing v
        """
        self.graph.check_vertices([v])
        return self.roles[v][1] - 1

    def clique(self, i):
        return self.blocks[i][0]

    def apex(self, i):
        return self.blocks[i][1]

    def delete(self, labels):
        """
        Induced clique-whiskered subgraph on V minus labels. Blocks losing all base vertices are dropped together
        with their apex.
        :param labels:
            iterable of vertex labels
        :return: CliqueWhiskeredGraph
        """
        labels = set(labels)
        self.graph.check_vertices(labels)
        blocks = []
        for clique, apex in self.blocks:
            kept = tuple(w for w in clique if w not in labels)
            if apex in labels and kept:
                raise GraphError('cannot delete apex %s while its clique (%s) remains' % (apex, ','.join(kept)))
            if kept:
                blocks.append((kept, apex))
        base = induced_delete(self.base, labels & set(self.base.vertices))
        return CliqueWhiskeredGraph(base, blocks)

    def promote(self, w):
        """
        Relabel so that base vertex w becomes w_11: its block moves first and w first in its block
        :return: CliqueWhiskeredGraph
        """
        if self.is_apex(w):
            raise GraphError('%s is an apex, not a base vertex' % w)
        i = self.block_of(w)
        clique, apex = self.blocks[i]
        first = ((w,) + tuple(v for v in clique if v != w), apex)
        return CliqueWhiskeredGraph(self.base, [first] + [b for n, b in enumerate(self.blocks) if n != i])


def build_graph(vertices, edges):
    """
    :param vertices:
        sequence of str
    :param edges:
        iterable of label pairs
    :return: Graph
    """
    return Graph(vertices, edges)


def induced_delete(graph, labels):
    """
    G minus W: vertex set V minus W, edges avoiding W, vertex order inherited
    :param graph: Graph
    :param labels: iterable of labels
    :return: Graph
    """
    labels = set(labels)
    graph.check_vertices(labels)
    return Graph([v for v in graph.vertices if v not in labels],
                 [e for e in graph.edges if e[0] not in labels and e[1] not in labels])


def neighborhood(graph, a, closed=False):
    """
    :param graph: Graph
    :param a: str, vertex
    :param closed: bool, closed neighborhood N[a] if True, open neighborhood N(a) otherwise
    :return: tuple of labels in canonical order
    """
    nbhd = graph.neighbors(a)
    if closed:
        return graph.sort(nbhd + (a,))
    return nbhd


def is_clique(graph, labels):
    labels = list(labels)
    return all(graph.has_edge(a, b) for a, b in itertools.combinations(labels, 2))


def simplicial_vertices(graph):
    """
    :return: tuple of the vertices whose open neighborhood induces a complete graph, canonical order
    """
    return tuple(v for v in graph.vertices if is_clique(graph, graph.neighbors(v)))


def is_chordal(graph):
    """
    A graph is chordal iff deleting simplicial vertices one at a time empties it (perfect elimination ordering)
    :return: bool
    """
    remaining = graph
    while len(remaining):
        simplicial = simplicial_vertices(remaining)
        if not simplicial:
            logger.debug('no simplicial vertex left among %i vertices: not chordal' % len(remaining))
            return False
        remaining = induced_delete(remaining, simplicial[:1])
    return True


def is_bipartite(graph):
    """
    2-colouring by breadth first search
    :return: (bool, (part_1, part_2)); the parts are None when the graph is not bipartite
    """
    colour = {}
    for start in graph.vertices:
        if start in colour:
            continue
        colour[start] = 0
        queue = [start]
        while queue:
            a = queue.pop(0)
            for b in graph.neighbors(a):
                if b not in colour:
                    colour[b] = 1 - colour[a]
                    queue.append(b)
                elif colour[b] == colour[a]:
                    return False, None
    parts = tuple(tuple(v for v in graph.vertices if colour[v] == c) for c in (0, 1))
    return True, parts


def components(graph):
    """
    :return: list of tuples of labels, one per connected component, ordered by first vertex
    """
    if not len(graph):
        return []
    n_components, labels = connected_components(csr_matrix(graph.adjacency.astype(np.int8)), directed=False)
    comps = [tuple(graph.vertices[i] for i in np.flatnonzero(labels == c)) for c in range(n_components)]
    return sorted(comps, key=lambda comp: graph.index[comp[0]])


def is_connected(graph):
    return len(components(graph)) <= 1


def disjoint_union(graph_1, graph_2):
    """
    :return: Graph with the vertices of graph_1 then graph_2; labels must be disjoint
    """
    common = set(graph_1.vertices) & set(graph_2.vertices)
    if common:
        raise GraphError('graphs share labels: %s' % ', '.join(sorted(common)))
    return Graph(graph_1.vertices + graph_2.vertices, graph_1.edges + graph_2.edges)


def cycle_graph(labels):
    labels = list(labels)
    if len(labels) < 3:
        raise GraphError('a cycle needs at least 3 vertices')
    return Graph(labels, [(labels[i], labels[(i + 1) % len(labels)]) for i in range(len(labels))])


def path_graph(labels):
    labels = list(labels)
    return Graph(labels, list(zip(labels[:-1], labels[1:])))


def complete_graph(labels):
    labels = list(labels)
    return Graph(labels, itertools.combinations(labels, 2))


def clique_whisker(graph, partition, apex_labels=None):
    """
    Clique-whiskered graph G^pi: one fresh apex per clique, joined to every vertex of the clique
    :param graph: Graph
    :param partition:
        CliquePartition or list of cliques
    :param apex_labels:
        list of str, default 'v1', ..., 'vt'; a collision with an existing label is an error
    :return: CliqueWhiskeredGraph
    """
    if not isinstance(partition, CliquePartition):
        partition = CliquePartition(partition)
    partition.validate(graph)
    if apex_labels is None:
        apex_labels = ['v%i' % i for i in range(1, len(partition) + 1)]
    if len(apex_labels) != len(partition):
        raise GraphError('%i apex labels given for %i cliques' % (len(apex_labels), len(partition)))
    return CliqueWhiskeredGraph(graph, list(zip(partition.cliques, apex_labels)))


def whiskered_graph(graph, apex_labels=None):
    """
    Whiskered graph W(G): clique-whiskered graph of the singleton partition
    """
    return clique_whisker(graph, [[v] for v in graph.vertices], apex_labels=apex_labels)


def whiskered_cycle(k):
    """
    G_k = W(C_2k) on x_1, ..., x_2k (cycle) and y_1, ..., y_2k (whiskers, y_i apex of {x_i})
    :param k:
        int, k >= 2
    :return: CliqueWhiskeredGraph with 4k vertices and 4k edges
    """
    if k < 2:
        raise GraphError('whiskered cycle G_k needs k >= 2, got %i' % k)
    cycle = cycle_graph(['x%i' % i for i in range(1, 2 * k + 1)])
    return whiskered_graph(cycle, apex_labels=['y%i' % i for i in range(1, 2 * k + 1)])


def cm_cameron_walker(bipartite, m, extra_components=()):
    """
    Cohen-Macaulay Cameron-Walker graph: connected bipartite graph H with parts (first m vertices of H) and
    (remaining vertices); a pendant triangle {w_i1, w_i2, v_i} is attached to each left vertex and a leaf edge
    {w_j1, v_j} to each right vertex.

    :param bipartite:
        Graph H, connected, every edge between the two parts
    :param m:
        int, number of left vertices, 1 <= m < |V_H|
    :param extra_components:
        sequence of 2 or 3, additional K_2 or K_3 connected components
    :return: CliqueWhiskeredGraph, with the vertex order w_11 > w_12 > v_1 > ... > w_m1 > w_m2 > v_m >
        w_(m+1)1 > v_(m+1) > ... > w_n1 > v_n
    """
    n = len(bipartite)
    if not 1 <= m < n:
        raise GraphError('Cameron-Walker core needs 1 <= m < n, got m=%i, n=%i' % (m, n))
    left, right = bipartite.vertices[:m], bipartite.vertices[m:]
    crossing = [e for e in bipartite.edges if (e[0] in left) == (e[1] in left)]
    if crossing:
        logger.error('edge %s does not join the two parts' % (crossing[0],))
        raise GraphError('H is not bipartite with the declared parts: edge %s' % (crossing[0],))
    if not is_connected(bipartite):
        raise GraphError('H is not connected')

    labels = list(bipartite.vertices)
    edges = list(bipartite.edges)
    cliques = []
    for i, w in enumerate(left, start=1):
        w2 = 'w%i_2' % i
        labels.append(w2)
        edges.append((w, w2))
        cliques.append([w, w2])
    cliques.extend([w] for w in right)
    for c, size in enumerate(extra_components, start=1):
        if size not in (2, 3):
            raise GraphError('extra Cameron-Walker component must be K_2 or K_3, got K_%s' % size)
        clique = ['z%i_%i' % (c, j) for j in range(1, size)]
        labels.extend(clique)
        edges.extend(itertools.combinations(clique, 2))
        cliques.append(clique)
    apexes = ['v%i' % i for i in range(1, len(cliques) + 1)]
    return clique_whisker(Graph(labels, edges), cliques, apex_labels=apexes)


def clique_corona(gamma, t, apex_labels=None):
    """
    Clique corona graph Gamma o {K_t1, ..., K_tn}: vertex w_i1 of Gamma is joined to a complete graph on
    {w_i2, ..., w_it_i, v_i}. With all t_i = 1 the result is the whiskered graph of Gamma.

    :param gamma: Graph
    :param t:
        sequence of int, one t_i >= 1 per vertex of gamma
    :param apex_labels:
        list of str, default 'v1', ..., 'vn'
    :return: CliqueWhiskeredGraph
    """
    t = list(t)
    if len(t) != len(gamma):
        raise GraphError('%i clique sizes given for %i vertices' % (len(t), len(gamma)))
    if any(t_i < 1 for t_i in t):
        raise GraphError('clique sizes must be >= 1, got %s' % t)
    labels = list(gamma.vertices)
    edges = list(gamma.edges)
    cliques = []
    for i, (w, t_i) in enumerate(zip(gamma.vertices, t), start=1):
        clique = [w] + ['w%i_%i' % (i, j) for j in range(2, t_i + 1)]
        labels.extend(clique[1:])
        edges.extend(itertools.combinations(clique, 2))
        cliques.append(clique)
    return clique_whisker(Graph(labels, edges), cliques, apex_labels=apex_labels)


def remove_apexes(cw_graph):
    """
    :return: Graph, the clique-whiskered graph with all apexes deleted (the base graph up to vertex order)
    """
    return induced_delete(cw_graph.graph, cw_graph.apexes)


def from_roles(graph, roles):
    """
    Rebuild a clique-whiskered graph from its graph and role tags {'x1': ['w', 1, 1], 'y1': ['v', 1]}
    :param graph: Graph
    :param roles: dict, label -> role
    :return: CliqueWhiskeredGraph
    """
    graph.check_vertices(roles)
    missing = [v for v in graph.vertices if v not in roles]
    if missing:
        raise GraphError('vertex without role: %s' % ', '.join(missing))
    members, apexes = {}, {}
    for label, role in roles.items():
        role = list(role)
        if role[0] == 'w' and len(role) == 3:
            members.setdefault(int(role[1]), {})[int(role[2])] = label
        elif role[0] == 'v' and len(role) == 2:
            if int(role[1]) in apexes:
                raise GraphError('two apexes for block %s' % role[1])
            apexes[int(role[1])] = label
        else:
            raise GraphError('malformed role %r for %s' % (role, label))
    if sorted(members) != sorted(apexes) or sorted(apexes) != list(range(1, len(apexes) + 1)):
        raise GraphError('blocks and apexes do not match: %s vs %s' % (sorted(members), sorted(apexes)))
    blocks = []
    for i in sorted(apexes):
        positions = sorted(members[i])
        if positions != list(range(1, len(positions) + 1)):
            raise GraphError('block %i has positions %s' % (i, positions))
        blocks.append(([members[i][j] for j in positions], apexes[i]))
    cw_graph = CliqueWhiskeredGraph(induced_delete(graph, apexes.values()), blocks)
    if set(map(frozenset, cw_graph.graph.edges)) != set(map(frozenset, graph.edges)):
        logger.error('apex neighborhoods do not match their cliques')
        raise GraphError('graph is not the clique-whiskered graph of its roles')
    return cw_graph
