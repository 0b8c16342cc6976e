#! /usr/bin/python3
# -*- coding: utf-8 -*-
"""
    homshift.tools : helper functions and configuration
"""

import logging

from homshift.tools.errors import HomShiftError, GraphError, UniverseError, CapExceededError, \
    PreconditionError, ParseError
from homshift.tools.config import Caps, RunConfig, resolve_caps

logger = logging.getLogger(__name__)


def isint(num):
    """
    :param num:
    :return: True if num is an integer (booleans excluded)
    """
    return isinstance(num, int) and not isinstance(num, bool)


def check_cap(value, cap, what):
    """
    Raise CapExceededError when value > cap
    :param value:
        int, size to check
    :param cap:
        int, allowed maximum
    :param what:
        str, description used in the error message
    """
    if value > cap:
        logger.error('%s: %i exceeds the cap of %i' % (what, value, cap))
        raise CapExceededError('%s: %i exceeds the cap of %i' % (what, value, cap))
    if value > 0.8 * cap and cap >= 10:
        logger.warning('%s: %i is close to the cap of %i' % (what, value, cap))
