#! /usr/bin/python3
# -*- coding: utf-8 -*-
"""
property/linquot.py contains the linear quotient machinery: order verification and search, quotient sets, the
homological shift ideals they give, the recursive order of chordal clique-whiskered graphs and the weakly
polymatroidal test
"""

import collections
import itertools
import logging

from scipy.special import comb

from homshift.core.graph import is_chordal, neighborhood, remove_apexes, simplicial_vertices
from homshift.core.monomial import Monomial, lcm, lex_key, minimalize, quotient
from homshift.property.covers import _check_minimal_cover, minimal_vertex_covers
from homshift.tools import check_cap, resolve_caps
from homshift.tools.errors import PreconditionError, UniverseError

__status__ = "dev"
__all__ = ["LinearQuotientOrder", "Witness", "QuotientFailure", "NotWeaklyPolymatroidal", "ExchangeFailure",
           "StarFailure", "BettiCountFailure", "ShiftProducts", "verify_order", "find_order", "permutation_sweep",
           "lex_order", "set_formula", "linear_quotient_products", "hs_via_linear_quotients",
           "hs_clique_whiskered", "exchange_violations", "exchange_check", "is_weakly_polymatroidal",
           "wpm_order_search", "chordal_hs_order", "star_condition", "betti_count_check"]

module_logger = logging.getLogger(__name__)

ShiftProducts = collections.namedtuple('ShiftProducts', ['ideal', 'discarded'])


class LinearQuotientOrder:
    """
    Generator order m_1, ..., m_r of a monomial ideal with linear quotients. quotient_sets[j] holds the variable
    indices generating <m_1, ..., m_j-1> : m_j, the first entry is empty.
    """

    def __init__(self, ideal, sequence, quotient_sets):
        self.ideal = ideal
        self.sequence = tuple(sequence)
        self.quotient_sets = tuple(tuple(s) for s in quotient_sets)

    def __len__(self):
        return len(self.sequence)

    def __iter__(self):
        return iter(zip(self.sequence, self.quotient_sets))

    def __bool__(self):
        return True

    def __repr__(self):
        return 'LinearQuotientOrder(%s)' % ' > '.join(str(m) for m in self.sequence)

    def set_of(self, m):
        """
        :param m: Monomial, generator
        :return: tuple of variable labels of set_I(m)
        """
        position = self.sequence.index(m)
        return tuple(self.ideal.variables[idx] for idx in self.quotient_sets[position])

    def max_set_size(self):
        return max((len(s) for s in self.quotient_sets), default=0)

    def to_dict(self):
        return {'sequence': [str(m) for m in self.sequence],
                'sets': [[self.ideal.variables[idx] for idx in s] for s in self.quotient_sets]}


class Witness:
    """
    Falsy result object explaining why a check failed
    """
    fields = ()

    def __bool__(self):
        return False

    def to_dict(self):
        return {name: _jsonable(getattr(self, name)) for name in self.fields}

    def __repr__(self):
        return '%s(%s)' % (type(self).__name__, ', '.join('%s=%s' % (name, getattr(self, name))
                                                          for name in self.fields))

    __str__ = __repr__


def _jsonable(value):
    if isinstance(value, Monomial):
        return str(value)
    if isinstance(value, (list, tuple)):
        return [_jsonable(item) for item in value]
    return value


class QuotientFailure(Witness):
    """
    The colon ideal at 1-based position `position` has the non-variable generator `monomial`
    """
    fields = ('position', 'generator', 'monomial')

    def __init__(self, position, generator, monomial):
        self.position = position
        self.generator = generator
        self.monomial = monomial


class NotWeaklyPolymatroidal(Witness):
    fields = ('u', 'v', 't')

    def __init__(self, u, v, t):
        self.u = u
        self.v = v
        self.t = t


class ExchangeFailure(Witness):
    fields = ('alpha', 'apex', 'vertex', 'exchanged')

    def __init__(self, alpha, apex, vertex, exchanged):
        self.alpha = alpha
        self.apex = apex
        self.vertex = vertex
        self.exchanged = exchanged


class StarFailure(Witness):
    fields = ('alpha', 'exchanged', 'reason')

    def __init__(self, alpha, exchanged, reason):
        self.alpha = alpha
        self.exchanged = exchanged
        self.reason = reason


class BettiCountFailure(Witness):
    fields = ('k', 'expected', 'found')

    def __init__(self, k, expected, found):
        self.k = k
        self.expected = expected
        self.found = found


def _colon_check(prefix, m):
    """
    <prefix> : m is generated by variables iff every lcm(g, m) / m is divisible by one of the degree one quotients

    :param prefix: sequence of Monomial
    :param m: Monomial
    :return: (sorted tuple of variable indices, None), or (None, a minimal non-variable generator of the colon)
    """
    if all(g.squarefree for g in prefix) and m.squarefree:
        quotients = [g.mask & ~m.mask for g in prefix]
        linear = 0
        for q in quotients:
            if q & (q - 1) == 0:
                linear |= q
        bad = [q for q in quotients if not q & linear]
        if not bad:
            return tuple(i for i in range(linear.bit_length()) if linear >> i & 1), None
        bad = [Monomial.from_mask(m.variables, q) for q in bad]
        return None, min(bad, key=lambda q: (q.degree, tuple(-e for e in q.dense)))
    quotients = [quotient(lcm(g, m), m) for g in prefix]
    linear = set(q.support[0] for q in quotients if q.degree == 1)
    bad = [q for q in quotients if not any(q.exponent(idx) for idx in linear)]
    if not bad:
        return tuple(sorted(linear)), None
    return None, min(bad, key=lambda q: (q.degree, tuple(-e for e in q.dense)))


def verify_order(ideal, sequence):
    """
    Check that every colon <m_1, ..., m_j-1> : m_j is generated by variables

    :param ideal: MonomialIdeal
    :param sequence: sequence of Monomial, a permutation of the minimal generators of ideal
    :return: LinearQuotientOrder, or a falsy QuotientFailure at the first bad position
    """
    sequence = list(sequence)
    if len(sequence) != len(ideal) or set(sequence) != set(ideal.generators):
        module_logger.error('(%s) sequence is not a permutation of the minimal generators' % ideal)
        raise PreconditionError('sequence is not a permutation of the minimal generators of %s' % ideal)
    sets = [()]
    for j in range(1, len(sequence)):
        linear, bad = _colon_check(sequence[:j], sequence[j])
        if bad is not None:
            module_logger.debug('(%s) colon at position %i has generator %s' % (ideal, j + 1, bad))
            return QuotientFailure(j + 1, sequence[j], bad)
        sets.append(linear)
    return LinearQuotientOrder(ideal, sequence, sets)


def find_order(ideal, caps=None):
    """
    Depth first search over admissible prefixes. The colon <prefix> : m only depends on the set of the prefix,
    so failing prefix sets are remembered.

    :param ideal: MonomialIdeal
    :param caps: Caps, caps.max_order_search bounds the number of generators
    :return: LinearQuotientOrder, or None when no order exists
    """
    caps = resolve_caps(caps)
    check_cap(len(ideal), caps.max_order_search, 'number of generators for the order search')
    gens = ideal.generators
    r = len(gens)
    full = (1 << r) - 1
    dead = set()

    def linear(mask, i):
        return _colon_check([gens[j] for j in range(r) if mask >> j & 1], gens[i])[1] is None

    def extend(mask, chosen):
        if mask == full:
            return chosen
        if mask in dead:
            return None
        for i in range(r):
            if mask >> i & 1:
                continue
            if mask and not linear(mask, i):
                continue
            found = extend(mask | 1 << i, chosen + [gens[i]])
            if found is not None:
                return found
        dead.add(mask)
        return None

    sequence = extend(0, [])
    if sequence is None:
        module_logger.info('(%s) no generator order with linear quotients (%i dead prefixes)' % (ideal, len(dead)))
        return None
    return verify_order(ideal, sequence)


def permutation_sweep(ideal, cap=6):
    """
    Exhaustive verification over all generator orders, for ideals with at most cap generators

    :return: LinearQuotientOrder or None
    """
    check_cap(len(ideal), cap, 'number of generators for the permutation sweep')
    for sequence in itertools.permutations(ideal.generators):
        order = verify_order(ideal, sequence)
        if order:
            return order
    return None


def lex_order(ideal, varorder=None):
    """
    :param ideal: MonomialIdeal
    :param varorder: sequence of variable labels, first is largest; default the universe order
    :return: list of the generators, lex descending
    """
    return ideal.sorted(varorder)


def set_formula(cw_graph, cover):
    """
    set(X_C) = union over the apexes v_i of N(v_i) minus C

    :param cw_graph: CliqueWhiskeredGraph
    :param cover: collection of labels, minimal vertex cover of cw_graph
    :return: tuple of base vertex labels in canonical order
    """
    cover = set(cover)
    _check_minimal_cover(cw_graph.graph, cover)
    return cw_graph.graph.sort(w for clique, _ in cw_graph.blocks for w in clique if w not in cover)


def _products(pairs, k, variables):
    """
    :param pairs: iterable of (Monomial m, sequence of variable indices s)
    :return: ShiftProducts for {m X_sigma : sigma in s, |sigma| = k}
    """
    products = set()
    for m, indices in pairs:
        for sigma in itertools.combinations(indices, k):
            products.add(m * Monomial(variables, {idx: 1 for idx in sigma}))
    ideal = minimalize(products, variables=variables)
    discarded = sorted((p for p in products if not ideal.is_generator(p)), key=lambda p: p.dense, reverse=True)
    if discarded:
        module_logger.warning('(%s) %i products are not minimal generators, first %s'
                              % (ideal, len(discarded), discarded[0]))
    return ShiftProducts(ideal, discarded)


def linear_quotient_products(order, k):
    """
    :param order: LinearQuotientOrder
    :param k: int, non-negative
    :return: ShiftProducts, HS_k from the quotient sets with the products removed by minimalization
    """
    if not isinstance(order, LinearQuotientOrder):
        raise PreconditionError('a verified LinearQuotientOrder is required, got %r' % (order,))
    if k < 0:
        raise PreconditionError('homological index must be non-negative, got %i' % k)
    ideal = order.ideal
    if ideal.is_zero():
        return ShiftProducts(ideal, [])
    if not ideal.is_equigenerated():
        raise PreconditionError('ideal %s is not equigenerated' % ideal)
    return _products(zip(order.sequence, order.quotient_sets), k, ideal.variables)


def hs_via_linear_quotients(ideal, order, k):
    """
    HS_k(I) = <m X_sigma : m in G(I), sigma subset of set_I(m), |sigma| = k>

    :param ideal: MonomialIdeal, equigenerated
    :param order: LinearQuotientOrder of ideal
    :param k: int, non-negative
    :return: MonomialIdeal, zero when every set_I(m) has fewer than k elements
    """
    if not isinstance(order, LinearQuotientOrder) or order.ideal != ideal:
        module_logger.error('(%s) order is not a verified linear quotient order of the ideal' % ideal)
        raise PreconditionError('order is not a verified linear quotient order of %s' % ideal)
    return linear_quotient_products(order, k).ideal


def hs_clique_whiskered(cw_graph, k, caps=None):
    """
    HS_k(J(G^pi)) generated by X_C X_sigma over the minimal covers C and the base vertex sets sigma with
    |sigma| = k disjoint from C

    :param cw_graph: CliqueWhiskeredGraph
    :param k: int, non-negative
    :param caps: Caps
    :return: ShiftProducts over the variables cw_graph.order
    """
    if k < 0:
        raise PreconditionError('homological index must be non-negative, got %i' % k)
    variables = cw_graph.order
    index = {v: i for i, v in enumerate(variables)}
    base = cw_graph.base_vertices
    pairs = []
    for cover in minimal_vertex_covers(cw_graph.graph, caps=caps):
        free = [index[w] for w in base if w not in set(cover)]
        pairs.append((Monomial.from_support(variables, cover), free))
    return _products(pairs, k, variables)


def exchange_violations(cw_graph, k, hs=None, caps=None):
    """
    For every generator alpha of HS_k(J(G^pi)) and every block (A_i, v_i) with v_i | alpha, w in A_i not dividing
    alpha, the exchanged monomial w alpha / v_i must be a minimal generator

    :param cw_graph: CliqueWhiskeredGraph
    :param k: int
    :param hs: MonomialIdeal, HS_k(J(G^pi)) over cw_graph.order, computed when not given
    :return: list of ExchangeFailure
    """
    if hs is None:
        hs = hs_clique_whiskered(cw_graph, k, caps=caps).ideal
    variables = hs.variables
    index = {v: i for i, v in enumerate(variables)}
    violations = []
    for alpha in hs.generators:
        for clique, apex in cw_graph.blocks:
            if not alpha.exponent(index[apex]):
                continue
            for w in clique:
                if alpha.exponent(index[w]):
                    continue
                exchanged = alpha * Monomial(variables, {index[w]: 1}) / Monomial(variables, {index[apex]: 1})
                if not hs.is_generator(exchanged):
                    violations.append(ExchangeFailure(alpha, apex, w, exchanged))
    return violations


def exchange_check(cw_graph, k, hs=None, caps=None):
    """
    :return: True, or the first ExchangeFailure
    """
    violations = exchange_violations(cw_graph, k, hs=hs, caps=caps)
    return violations[0] if violations else True


def is_weakly_polymatroidal(ideal, varorder=None):
    """
    For all u > v in G(I) (lex in varorder) first differing at x_t, some x_j after x_t divides v with
    x_t v / x_j in G(I)

    :param ideal: MonomialIdeal
    :param varorder: sequence of variable labels, default the universe order
    :return: True, or a falsy NotWeaklyPolymatroidal (u, v, x_t)
    """
    variables = ideal.variables
    if varorder is None:
        varorder = variables
    varorder = tuple(varorder)
    if sorted(varorder) != sorted(variables):
        raise UniverseError('variable order is not a permutation of the universe')
    index = {v: i for i, v in enumerate(variables)}
    gens = ideal.sorted(varorder)
    keys = [lex_key(g, varorder) for g in gens]
    for p, q in itertools.combinations(range(len(gens)), 2):
        u, v = gens[p], gens[q]
        t = next(i for i, (a, b) in enumerate(zip(keys[p], keys[q])) if a != b)
        x_t = Monomial(variables, {index[varorder[t]]: 1})
        found = False
        for x_j in varorder[t + 1:]:
            if not v.exponent(index[x_j]):
                continue
            if ideal.is_generator(v * x_t / Monomial(variables, {index[x_j]: 1})):
                found = True
                break
        if not found:
            module_logger.debug('(%s) weakly polymatroidal exchange fails for %s, %s at %s' % (ideal, u, v,
                                                                                                 varorder[t]))
            return NotWeaklyPolymatroidal(u, v, varorder[t])
    return True


def wpm_order_search(ideal, caps=None):
    """
    Exhaustive search of a variable order making ideal weakly polymatroidal. Variables outside the support of the
    generators are appended in universe order.

    :return: tuple of variable labels, or None
    """
    caps = resolve_caps(caps)
    used = ideal.lcm_all().labels
    check_cap(len(used), caps.max_wpm_order_search, 'number of variables for the weakly polymatroidal search')
    rest = tuple(v for v in ideal.variables if v not in set(used))
    for perm in itertools.permutations(used):
        if is_weakly_polymatroidal(ideal, perm + rest):
            return perm + rest
    return None


def _chordal_sequence(cw_graph, k, variables, caps):
    """
    Recursive order of HS_k(J(G^pi)) over variables, splitting at the simplicial base vertex w last in the
    canonical order; w is promoted to w_11 first
    """
    if not cw_graph.blocks:
        return [Monomial.one(variables)] if k == 0 else []
    if k == 0:
        covers = minimal_vertex_covers(cw_graph.graph, caps=caps)
        return lex_order(covers.ideal(variables), cw_graph.order)

    w = simplicial_vertices(remove_apexes(cw_graph))[-1]
    promoted = cw_graph.promote(w)
    graph = promoted.graph
    closed = neighborhood(graph, w, closed=True)
    a = Monomial.from_support(variables, closed)
    b = Monomial.from_support(variables, [w])
    c = Monomial.from_support(variables, neighborhood(graph, w))

    without_closed = promoted.delete(closed)
    first = [a * f for f in _chordal_sequence(without_closed, k - 1, variables, caps)]
    seen = set(first)
    second = [b * g for g in _chordal_sequence(promoted.delete([w]), k, variables, caps) if b * g not in seen]
    seen.update(second)
    third = [c * e for e in _chordal_sequence(without_closed, k, variables, caps) if c * e not in seen]
    module_logger.debug('(%s) k=%i split at %s: %i + %i + %i generators'
                        % (cw_graph, k, w, len(first), len(second), len(third)))
    return first + second + third


def chordal_hs_order(cw_graph, k, caps=None):
    """
    Linear quotient order of HS_k(J(G^pi)) for a chordal base graph: the block a.f of
    X_N[w] HS_k-1(J(G^pi - N[w])), then b.g of X_w HS_k(J(G^pi - w)) not already listed, then c.e of
    X_N(w) HS_k(J(G^pi - N[w])), each block in its own recursive order

    :param cw_graph: CliqueWhiskeredGraph with chordal base
    :param k: int, non-negative
    :param caps: Caps
    :return: LinearQuotientOrder of HS_k(J(G^pi)), or a falsy QuotientFailure
    """
    caps = resolve_caps(caps)
    if k < 0:
        raise PreconditionError('homological index must be non-negative, got %i' % k)
    if not is_chordal(remove_apexes(cw_graph)):
        module_logger.error('(%s) base graph is not chordal' % cw_graph)
        raise PreconditionError('base graph of %r is not chordal' % cw_graph)
    variables = cw_graph.order
    sequence = _chordal_sequence(cw_graph, k, variables, caps)
    hs = minimalize(sequence, variables=variables)
    kept = [m for m in sequence if hs.is_generator(m)]
    if len(kept) != len(sequence):
        module_logger.warning('(%s) %i non-minimal products dropped from the chordal order'
                              % (cw_graph, len(sequence) - len(kept)))
    return verify_order(hs, kept)


def star_condition(cw_graph, sequence):
    """
    For alpha in the sequence with v_i | alpha and w_ij not dividing alpha, the exchanged monomial
    w_ij alpha / v_i is in the sequence and comes before alpha

    :param cw_graph: CliqueWhiskeredGraph
    :param sequence: sequence of Monomial (or a LinearQuotientOrder)
    :return: True, or a falsy StarFailure
    """
    if isinstance(sequence, LinearQuotientOrder):
        sequence = sequence.sequence
    sequence = list(sequence)
    if not sequence:
        return True
    variables = sequence[0].variables
    index = {v: i for i, v in enumerate(variables)}
    position = {m: i for i, m in enumerate(sequence)}
    for i, alpha in enumerate(sequence):
        for clique, apex in cw_graph.blocks:
            if not alpha.exponent(index[apex]):
                continue
            for w in clique:
                if alpha.exponent(index[w]):
                    continue
                exchanged = alpha * Monomial(variables, {index[w]: 1}) / Monomial(variables, {index[apex]: 1})
                if exchanged not in position:
                    return StarFailure(alpha, exchanged, 'not a generator')
                if position[exchanged] > i:
                    return StarFailure(alpha, exchanged, 'placed after')
    return True


def betti_count_check(order, table):
    """
    For a linear quotient order, sum_a beta_{k,a} = sum_m binomial(|set(m)|, k) for every k

    :param order: LinearQuotientOrder
    :param table: BettiTable of order.ideal
    :return: True, or a falsy BettiCountFailure
    """
    top = max(order.max_set_size(), int(table.k.max()) if len(table) else 0)
    for k in range(top + 1):
        expected = sum(int(comb(len(s), k, exact=True)) for s in order.quotient_sets)
        found = table.total(k)
        if expected != found:
            module_logger.warning('(%s) total Betti number at k=%i: %i expected, %i found'
                                  % (order.ideal, k, expected, found))
            return BettiCountFailure(k, expected, found)
    return True
