#! /usr/bin/python3
# -*- coding: utf-8 -*-
"""
    homshift.core.monomial.py : exact monomial and monomial ideal arithmetic over an ordered variable list
"""

import logging
import re

import numpy as np

from homshift.tools.errors import UniverseError, ParseError, PreconditionError

__comment__ = "monomial.py contains class Monomial() and MonomialIdeal(), and the arithmetic on them (lcm, colon, " \
              "sum, intersection, lexicographic order)"

__all__ = ["Monomial", "MonomialIdeal", "lcm", "divides", "quotient", "minimalize", "colon_by_monomial", "scale",
           "ideal_sum", "intersect", "product", "equals", "lex_compare", "lex_key", "LESS", "EQUAL", "GREATER"]

logger = logging.getLogger(__name__)

LESS, EQUAL, GREATER = -1, 0, 1

_TOKEN = re.compile(r'\^(\d+)')


def _split_factors(text, pos, names):
    """
    :return: list of (name, exponent) covering text[pos:], or None when no split exists
    """
    if pos == len(text):
        return []
    for name in names:
        if not text.startswith(name, pos):
            continue
        end = pos + len(name)
        e = 1
        power = _TOKEN.match(text, end)
        if power:
            e = int(power.group(1))
            end = power.end()
        rest = _split_factors(text, end, names)
        if rest is not None:
            return [(name, e)] + rest
    return None


def _check_universe(*items):
    variables = items[0].variables
    for item in items[1:]:
        if item.variables is not variables and item.variables != variables:
            logger.error('variable universe mismatch: (%s) vs (%s)' % (', '.join(variables),
                                                                       ', '.join(item.variables)))
            raise UniverseError('variable universe mismatch')
    return variables


class Monomial:
    """
    Monomial x^a over an ordered variable list. Exponents are stored sparsely as {variable index: exponent},
    zero exponents are never stored.
    """
    __slots__ = ('variables', '_exp', '_key', 'mask', 'squarefree', 'degree', '_hash')

    def __init__(self, variables, exponents=None):
        """
        :param variables:
            tuple of str, the ordered variable list (universe)
        :param exponents:
            dict, variable index -> non-negative integer
        """
        self.variables = tuple(variables)
        _exp = {}
        if exponents:
            for idx, e in dict(exponents).items():
                if not 0 <= idx < len(self.variables):
                    raise UniverseError('variable index %i out of range' % idx)
                if e < 0:
                    raise PreconditionError('negative exponent %i for %s' % (e, self.variables[idx]))
                if e:
                    _exp[idx] = int(e)
        self._exp = _exp
        self._key = tuple(sorted(_exp.items()))
        self.degree = sum(_exp.values())
        self.squarefree = all(e == 1 for e in _exp.values())
        self.mask = sum(1 << idx for idx in _exp)
        self._hash = hash((self.variables, self._key))

    # constructors
    @classmethod
    def one(cls, variables):
        return cls(variables)

    @classmethod
    def from_labels(cls, variables, exponents):
        """
        :param variables:
            tuple of str
        :param exponents:
            dict, variable label -> exponent
        :return: Monomial
        """
        variables = tuple(variables)
        index = {v: i for i, v in enumerate(variables)}
        try:
            return cls(variables, {index[label]: e for label, e in exponents.items()})
        except KeyError as err:
            raise UniverseError('unknown variable %s' % err) from err

    @classmethod
    def from_support(cls, variables, labels):
        """
        Squarefree monomial X_A = prod_{x in A} x
        :param variables:
            tuple of str
        :param labels:
            iterable of variable labels
        :return: Monomial
        """
        return cls.from_labels(variables, {label: 1 for label in labels})

    @classmethod
    def from_mask(cls, variables, mask):
        return cls(variables, {idx: 1 for idx in range(len(variables)) if mask >> idx & 1})

    @classmethod
    def parse(cls, text, variables):
        """
        Parse 'x1x3', 'x1^2x3' or '1'. Variable names are tried longest first, backtracking when the rest of
        the text does not parse.
        :param text:
            str
        :param variables:
            tuple of str
        :return: Monomial
        """
        variables = tuple(variables)
        text = text.strip().replace('*', '')
        if text == '1':
            return cls(variables)
        factors = _split_factors(text, 0, sorted(variables, key=len, reverse=True))
        if factors is None:
            raise ParseError('cannot parse monomial %r over %s' % (text, ', '.join(variables)))
        exponents = {}
        for name, e in factors:
            exponents[name] = exponents.get(name, 0) + e
        return cls.from_labels(variables, exponents)

    # accessors
    def exponent(self, idx):
        return self._exp.get(idx, 0)

    def items(self):
        """
        :return: tuple of (variable index, exponent), by increasing index
        """
        return self._key

    @property
    def support(self):
        return tuple(idx for idx, _ in self._key)

    @property
    def labels(self):
        return tuple(self.variables[idx] for idx, _ in self._key)

    @property
    def dense(self):
        return tuple(self._exp.get(idx, 0) for idx in range(len(self.variables)))

    def vector(self, order=None):
        """
        :param order:
            sequence of variable labels, default the universe order
        :return: np.ndarray of exponents along order
        """
        if order is None:
            return np.array(self.dense, dtype=np.int64)
        index = {v: i for i, v in enumerate(self.variables)}
        return np.array([self._exp.get(index[v], 0) for v in order], dtype=np.int64)

    def as_dict(self):
        return {self.variables[idx]: e for idx, e in self._key}

    def is_one(self):
        return not self._exp

    def is_variable(self):
        return self.degree == 1

    # arithmetic
    def __mul__(self, other):
        _check_universe(self, other)
        exponents = dict(self._exp)
        for idx, e in other._exp.items():
            exponents[idx] = exponents.get(idx, 0) + e
        return Monomial(self.variables, exponents)

    def __truediv__(self, other):
        return quotient(self, other)

    def __eq__(self, other):
        if not isinstance(other, Monomial):
            return NotImplemented
        return self._key == other._key and self.variables == other.variables

    def __hash__(self):
        return self._hash

    # string hashes differ between processes, rebuild on unpickling
    def __reduce__(self):
        return Monomial, (self.variables, self._exp)

    def __lt__(self, other):
        return lex_compare(self, other) == LESS

    def __repr__(self):
        return 'Monomial(%s)' % str(self)

    def __str__(self):
        if not self._exp:
            return '1'
        return ''.join(self.variables[idx] if e == 1 else '%s^%i' % (self.variables[idx], e)
                       for idx, e in self._key)


def lcm(u, v):
    """
    :param u: Monomial
    :param v: Monomial
    :return: Monomial, componentwise maximum of the exponents
    """
    _check_universe(u, v)
    exponents = dict(u._exp)
    for idx, e in v._exp.items():
        if e > exponents.get(idx, 0):
            exponents[idx] = e
    return Monomial(u.variables, exponents)


def divides(u, v):
    """
    :return: True iff every exponent of u is at most the one of v
    """
    _check_universe(u, v)
    if u.squarefree and v.squarefree:
        return u.mask & ~v.mask == 0
    return all(v._exp.get(idx, 0) >= e for idx, e in u._exp.items())


def quotient(u, v):
    """
    Exact quotient u / v
    :return: Monomial
    """
    _check_universe(u, v)
    if not divides(v, u):
        raise PreconditionError('%s does not divide %s' % (v, u))
    exponents = dict(u._exp)
    for idx, e in v._exp.items():
        exponents[idx] -= e
    return Monomial(u.variables, exponents)


def lex_key(u, order=None):
    """
    Sorting key for the lexicographic order induced by the variable order (first variable largest)
    :param u: Monomial
    :param order:
        sequence of variable labels, default the universe order
    :return: tuple
    """
    if order is None:
        return u.dense
    index = {v: i for i, v in enumerate(u.variables)}
    return tuple(u.exponent(index[var]) for var in order)


def lex_compare(u, v, order=None):
    """
    Standard lexicographic comparison: exponent vectors are compared along the variable order and the first
    difference decides.
    :param u: Monomial
    :param v: Monomial
    :param order:
        sequence of variable labels (a permutation of the universe), default the universe order
    :return: LESS, EQUAL or GREATER
    """
    _check_universe(u, v)
    if order is not None and sorted(order) != sorted(u.variables):
        raise UniverseError('variable order is not a permutation of the universe')
    diff = u.vector(order) - v.vector(order)
    nonzero = np.flatnonzero(diff)
    if nonzero.size == 0:
        return EQUAL
    return GREATER if diff[nonzero[0]] > 0 else LESS


class MonomialIdeal:
    """
    Monomial ideal stored by its minimal generators, in lex-descending order under the variable order.
    The unit ideal is generated by 1, the zero ideal has no generator.
    """
    __slots__ = ('variables', 'generators', '_set')

    def __init__(self, variables, generators=()):
        """
        :param variables:
            tuple of str
        :param generators:
            iterable of Monomial, minimalized on construction
        """
        self.variables = tuple(variables)
        gens = set()
        for g in generators:
            if g.variables != self.variables:
                raise UniverseError('generator %s is not defined over the ideal variables' % g)
            gens.add(g)
        # smallest degree first: a generator can only be divided by one of lower or equal degree
        kept = []
        for g in sorted(gens, key=lambda m: m.degree):
            if not any(divides(h, g) for h in kept):
                kept.append(g)
        self.generators = tuple(sorted(kept, key=lambda m: m.dense, reverse=True))
        self._set = frozenset(self.generators)

    @classmethod
    def zero(cls, variables):
        return cls(variables)

    @classmethod
    def unit(cls, variables):
        return cls(variables, [Monomial.one(variables)])

    @classmethod
    def parse(cls, texts, variables):
        """
        :param texts:
            iterable of monomial strings ('x1x3', 'x1^2x2')
        :param variables:
            tuple of str
        :return: MonomialIdeal
        """
        variables = tuple(variables)
        return cls(variables, [Monomial.parse(text, variables) for text in texts])

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __eq__(self, other):
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.variables == other.variables and self._set == other._set

    def __hash__(self):
        return hash((self.variables, self._set))

    def __repr__(self):
        return 'MonomialIdeal(%s)' % str(self)

    def __str__(self):
        return '<%s>' % ', '.join(str(g) for g in self.generators)

    def is_zero(self):
        return not self.generators

    def is_unit(self):
        return len(self.generators) == 1 and self.generators[0].is_one()

    def is_generator(self, m):
        return m in self._set

    def contains(self, m):
        """
        Ideal membership of a monomial
        :param m: Monomial
        :return: bool
        """
        return any(divides(g, m) for g in self.generators)

    def degrees(self):
        return sorted(set(g.degree for g in self.generators))

    def is_squarefree(self):
        return all(g.squarefree for g in self.generators)

    def is_equigenerated(self):
        return len(self.degrees()) == 1

    def generation_degree(self):
        """
        :return: int, the common degree of the generators
        """
        degrees = self.degrees()
        if len(degrees) != 1:
            raise PreconditionError('ideal %s is not equigenerated (degrees %s)' % (self, degrees))
        return degrees[0]

    def max_degree(self):
        return max(g.degree for g in self.generators) if self.generators else 0

    def lcm_all(self):
        """
        :return: Monomial, lcm of all generators
        """
        result = Monomial.one(self.variables)
        for g in self.generators:
            result = lcm(result, g)
        return result

    def restrict(self, a):
        """
        :param a: Monomial
        :return: tuple of the generators dividing a
        """
        return tuple(g for g in self.generators if divides(g, a))

    def sorted(self, order=None):
        """
        :param order:
            variable order, default the universe order
        :return: list of generators in lex-descending order
        """
        return sorted(self.generators, key=lambda m: lex_key(m, order), reverse=True)

    def __add__(self, other):
        return ideal_sum(self, other)

    def __mul__(self, other):
        if isinstance(other, Monomial):
            return scale(self, other)
        return product(self, other)


def minimalize(gens, variables=None):
    """
    Discard every generator strictly divisible by another one (and duplicates)
    :param gens:
        iterable of Monomial
    :param variables:
        tuple of str, required when gens is empty
    :return: MonomialIdeal
    """
    gens = list(gens)
    if variables is None:
        if not gens:
            raise PreconditionError('the variables of an empty generating set must be given')
        variables = gens[0].variables
    return MonomialIdeal(variables, gens)


def colon_by_monomial(ideal, m):
    """
    <g_1, ..., g_r> : m = <lcm(g_i, m) / m>
    :param ideal: MonomialIdeal
    :param m: Monomial
    :return: MonomialIdeal
    """
    _check_universe(ideal, m)
    return MonomialIdeal(ideal.variables, [quotient(lcm(g, m), m) for g in ideal.generators])


def scale(ideal, m):
    """
    :return: MonomialIdeal m * ideal
    """
    _check_universe(ideal, m)
    return MonomialIdeal(ideal.variables, [g * m for g in ideal.generators])


def ideal_sum(*ideals):
    """
    :return: MonomialIdeal, sum of the ideals
    """
    variables = _check_universe(*ideals)
    return MonomialIdeal(variables, [g for ideal in ideals for g in ideal.generators])


def intersect(ideal_1, ideal_2):
    """
    :return: MonomialIdeal, generated by the pairwise lcms
    """
    variables = _check_universe(ideal_1, ideal_2)
    return MonomialIdeal(variables, [lcm(g, h) for g in ideal_1.generators for h in ideal_2.generators])


def product(ideal_1, ideal_2):
    variables = _check_universe(ideal_1, ideal_2)
    return MonomialIdeal(variables, [g * h for g in ideal_1.generators for h in ideal_2.generators])


def equals(ideal_1, ideal_2):
    """
    :return: True iff the minimal generating sets coincide
    """
    _check_universe(ideal_1, ideal_2)
    return ideal_1 == ideal_2
