# ! /usr/bin/python3
# -*- coding: utf-8 -*-
"""
    homshift.core.betti.py : multigraded Betti table of a monomial ideal
"""
import logging

import pandas as pd

from homshift.core.monomial import MonomialIdeal, minimalize
from homshift.tools.errors import PreconditionError

__comment__ = "betti.py contains class BettiTable() to store the nonzero multigraded Betti numbers of a monomial " \
              "ideal, one row per (k, multidegree)"

__all__ = ["BettiTable"]

logger = logging.getLogger(__name__)

COLUMNS = ['k', 'degree', 'multidegree', 'beta']


class BettiTable(pd.DataFrame):
    """
    Rows (k, |a|, a, beta_{k,a}) for the nonzero Betti numbers only. `ideal` is the source ideal.
    """
    _metadata = ['ideal']

    @property
    def _constructor(self):
        return BettiTable

    def __init__(self, *args, ideal=None, **kwargs):
        super(BettiTable, self).__init__(*args, **kwargs)
        self.ideal = ideal

    @classmethod
    def from_entries(cls, entries, ideal):
        """
        :param entries:
            iterable of (k, Monomial a, beta); zero betas are dropped
        :param ideal:
            MonomialIdeal, source ideal
        :return: BettiTable sorted by k, total degree, then lex-descending multidegree
        """
        rows = sorted(((k, a.degree, a, beta) for k, a, beta in entries if beta),
                      key=lambda row: (row[0], row[1], tuple(-e for e in row[2].dense)))
        table = cls(rows, columns=COLUMNS, ideal=ideal)
        return table.astype({'k': int, 'degree': int, 'beta': int})

    def beta(self, k, a):
        """
        :return: int, beta_{k,a}, 0 when not stored
        """
        rows = self[(self.k == k) & (self.multidegree == a)]
        return int(rows['beta'].sum())

    def shifts(self, k):
        """
        :return: list of the k-th multigraded shifts a, as Monomial
        """
        return list(self[self.k == k].multidegree)

    def hs(self, k):
        """
        :return: MonomialIdeal generated by x^a over the nonzero beta_{k,a}
        """
        if k < 0:
            raise PreconditionError('homological index must be non-negative, got %i' % k)
        return minimalize(self.shifts(k), variables=self.ideal.variables)

    def projective_dimension(self):
        if self.empty:
            logger.error('projective dimension of the zero ideal is undefined')
            raise PreconditionError('projective dimension of the zero ideal is undefined')
        return int(self.k.max())

    def regularity(self):
        """
        :return: int, max over the entries of |a| - k
        """
        if self.empty:
            raise PreconditionError('regularity of an empty Betti table is undefined')
        return int((self.degree - self.k).max())

    def graded(self):
        """
        :return: pd.DataFrame, beta_{k,d} summed over multidegrees of total degree d; rows k, columns d
        """
        return pd.DataFrame(self).pivot_table(index='k', columns='degree', values='beta', aggfunc='sum',
                                              fill_value=0)

    def total(self, k):
        """
        :return: int, sum over a of beta_{k,a}
        """
        return int(self[self.k == k]['beta'].sum())

    def is_linear(self):
        """
        :return: True iff every entry satisfies |a| = k + d for the generation degree d
        """
        if not isinstance(self.ideal, MonomialIdeal):
            raise PreconditionError('Betti table has no source ideal')
        d = self.ideal.generation_degree()
        return bool(((self.degree - self.k) == d).all())
