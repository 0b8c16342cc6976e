#! /usr/bin/python3
# -*- coding: utf-8 -*-
"""
    homshift is a module to compute homological shift ideals of cover ideals of clique-whiskered graphs
"""

__license__ = "GPL"
__status__ = "dev"

import homshift.core
import homshift.io
import homshift.io.load
import homshift.io.export
import homshift.tools
import homshift.property
import homshift.property.covers
import homshift.property.resolution
import homshift.property.linquot
import homshift.property.pipelines
import homshift.property.corpus

from .__version__ import __version__
from homshift.core.graph import Graph, CliqueWhiskeredGraph
from homshift.core.monomial import Monomial, MonomialIdeal
from homshift.core.betti import BettiTable
from homshift.core.report import TheoremReport
