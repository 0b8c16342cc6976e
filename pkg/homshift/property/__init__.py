#! /usr/bin/python3
# -*- coding: utf-8 -*-
"""
    homshift.property : computations on cover ideals of clique-whiskered graphs
"""
__all__ = ['covers', 'resolution', 'linquot', 'pipelines', 'corpus']
