#! /usr/bin/python3
# -*- coding: utf-8 -*-
"""
    homshift.core.report.py : TheoremReport class
"""
import logging

import pandas as pd

from homshift.tools.errors import HomShiftError

__comment__ = "report.py contains class TheoremReport() to collect pass/fail checks with witnesses, routes, seeds " \
              "and timings, one row per (subject, check, k)"

__all__ = ["TheoremReport", "CHECKS", "COLUMNS"]

logger = logging.getLogger(__name__)

COLUMNS = ['subject', 'check', 'k', 'passed', 'witness', 'route', 'seconds', 'seed']

# documented check names
CHECKS = {
    'route_equality': 'HS_k via linear quotients equals HS_k from the Betti oracle',
    'lex_linear_quotients': 'J(G^pi) has linear quotients in the lexicographic order of the canonical vertex order',
    'set_formula': 'set(X_C) is the union over the apexes of N(v_i) minus C',
    'cover_restriction': 'every base vertex set disjoint from C lies in set(X_C)',
    'exchange': 'v_i | alpha and w_ij not dividing alpha give w_ij alpha / v_i in G(HS_k)',
    'apex_count': 'every minimal cover meets N[v_i] in |N[v_i]| - 1 vertices',
    'w_partition': 'J(G^pi) splits at a base vertex w with the expected intersection',
    'betti_splitting': 'HS_k(J(G^pi)) is the three term sum at a base vertex w',
    'chordal_order': 'the recursive chordal order of HS_k(J(G^pi)) has linear quotients',
    'star_condition': 'exchanged generators are generators placed earlier in the chordal order',
    'weakly_polymatroidal': 'HS_k(J(G^pi)) is weakly polymatroidal in the stated variable order',
    'wpm_linear_quotients': 'a weakly polymatroidal ideal has linear quotients in its lex order',
    'betti_count': 'sum_a beta_{k,a} equals sum_m binomial(|set(m)|, k)',
    'euler': 'alternating Betti sums match the reduced Euler characteristic of the Koszul complexes',
    'off_lattice': 'Koszul homology vanishes off the lcm lattice',
    'discarded_products': 'informational: products X_C X_sigma removed by minimalization',
    'closed_form': 'HS_k(J(G_k)) equals x_1...x_2k <y_1y_3..., y_2y_4...>',
    'generation_degree': 'HS_k(J(G_k)) is generated in degree 3k',
    'regularity': 'reg HS_k(J(G_k)) = 4k - 1',
    'no_linear_resolution': 'HS_k(J(G_k)) has no linear resolution',
    'no_linear_quotients': 'no generator order of HS_k(J(G_k)) has linear quotients',
    'corona_linear_quotients': 'clique coronas with all t_i >= 2 have HS_k with linear quotients',
    'corona_whiskers_fail': 'the whiskered cycle C_4 (all t_i = 1) loses linear quotients at k = 2',
}


class TheoremReport(pd.DataFrame):
    """
    TheoremReport
    """
    _metadata = ['subject']

    @property
    def _constructor(self):
        return TheoremReport

    def __init__(self, *args, subject=None, **kwargs):
        if not args and 'data' not in kwargs:
            kwargs.setdefault('columns', COLUMNS)
        super(TheoremReport, self).__init__(*args, **kwargs)
        self.subject = subject

    def add_check(self, check, passed, witness=None, k=None, route=None, seconds=0.0, seed=None):
        """
        :param check:
            str, name from CHECKS
        :param passed:
            bool
        :param witness:
            object explaining a failure (required when passed is False)
        :param k:
            int or None, homological index the check is about
        :param route:
            str or None, 'oracle', 'linquot' or 'closed_form'
        :param seconds:
            float, time spent
        :param seed:
            int or None, corpus seed
        :return: TheoremReport, with the new row appended
        """
        if check not in CHECKS:
            logger.error('(%s) undocumented check %s' % (self.subject, check))
            raise HomShiftError('undocumented check %s' % check)
        passed = bool(passed)
        if not passed and witness is None:
            raise HomShiftError('failed check %s carries no witness' % check)
        if passed:
            logger.debug('(%s) %s k=%s passed' % (self.subject, check, k))
        else:
            logger.warning('(%s) %s k=%s failed: %s' % (self.subject, check, k, witness))
        row = pd.DataFrame([[self.subject, check, k, passed, witness, route, float(seconds), seed]],
                           columns=COLUMNS)
        frame = row if self.empty else pd.concat([pd.DataFrame(self), row], ignore_index=True)
        return TheoremReport(frame, subject=self.subject)

    @property
    def passed(self):
        """
        :return: True iff every check passed (an empty report passes)
        """
        return bool(self['passed'].astype(bool).all())

    def failures(self):
        return self[~self['passed'].astype(bool)]

    def summary(self):
        """
        :return: pd.DataFrame, number of runs and failures per check
        """
        frame = pd.DataFrame(self)
        frame['failed'] = ~frame['passed'].astype(bool)
        return frame.groupby('check').agg(runs=('passed', 'size'), failed=('failed', 'sum'))

    @classmethod
    def merge(cls, reports, subject=None):
        """
        Concatenate reports in a deterministic order: by subject, then in check order within a subject

        :param reports:
            iterable of TheoremReport
        :param subject:
            str, subject of the merged report
        :return: TheoremReport
        """
        frames = [pd.DataFrame(report) for report in reports if len(report)]
        if not frames:
            return cls(subject=subject)
        frame = pd.concat(frames, ignore_index=True)
        frame['_position'] = range(len(frame))
        frame = frame.sort_values(['subject', '_position'], kind='stable').drop(columns='_position')
        return cls(frame.reset_index(drop=True), subject=subject)
