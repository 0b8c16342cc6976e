#! /usr/bin/python3
# -*- coding: utf-8 -*-
"""
    homshift.io : JSON input and JSON, CSV and DOT output
"""
__comment__ = "io contains load.py to read graphs and ideals, export.py to render results"
__all__ = ['load', 'export']
