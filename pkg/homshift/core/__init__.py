#! /usr/bin/python3
# -*- coding: utf-8 -*-
"""
    homshift.core : graphs, monomial ideals, Betti tables and theorem reports
"""
__all__ = ['graph', 'monomial', 'betti', 'report']
