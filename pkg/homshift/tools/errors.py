#! /usr/bin/python3
# -*- coding: utf-8 -*-
"""
    homshift.tools.errors.py : exception hierarchy shared by all homshift modules
"""

__all__ = ["HomShiftError", "GraphError", "UniverseError", "CapExceededError", "PreconditionError",
           "ParseError"]


class HomShiftError(Exception):
    """
    Base class of every error raised by homshift
    """
    pass


class GraphError(HomShiftError, ValueError):
    """
    Invalid graph data: duplicate or unknown labels, loops, bad clique partition, wrong family shape
    """
    pass


class UniverseError(HomShiftError, ValueError):
    """
    Monomials or ideals defined over different variable lists
    """
    pass


class CapExceededError(HomShiftError, RuntimeError):
    """
    A configured size cap (vertices, generators, faces, search size) is exceeded
    """
    pass


class PreconditionError(HomShiftError, ValueError):
    """
    An operation was called outside of its domain
    """
    pass


class ParseError(HomShiftError, ValueError):
    """
    Malformed JSON document, monomial string or configuration value
    """
    pass
