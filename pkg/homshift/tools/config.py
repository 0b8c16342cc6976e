#! /usr/bin/python3
# -*- coding: utf-8 -*-
"""
    homshift.tools.config.py : size caps and run configuration
"""

import dataclasses
import json
import logging
import os

from homshift.tools.errors import ParseError

__all__ = ["Caps", "RunConfig", "MAX_VERTICES", "MAX_GENERATORS", "MAX_FACES", "MAX_ORDER_SEARCH",
           "MAX_SUBSET_CHECK", "MAX_WPM_ORDER_SEARCH", "DEFAULT_SEED", "CAPS_ENV", "COMMANDS", "FORMATS",
           "ROUTES", "MODES", "resolve_caps"]

logger = logging.getLogger(__name__)

# Default values
MAX_VERTICES = 24
MAX_GENERATORS = 20
MAX_FACES = 2 ** 14
MAX_ORDER_SEARCH = 12
MAX_SUBSET_CHECK = 16
MAX_WPM_ORDER_SEARCH = 8
DEFAULT_SEED = 20240901

CAPS_ENV = 'HOMSHIFT_CAPS'

COMMANDS = ['covers', 'cover-ideal', 'hs', 'betti', 'check', 'counterexample', 'construct', 'find-lq',
            'check-wpm', 'lattice', 'suite']
FORMATS = ['human', 'json', 'csv']
ROUTES = ['oracle', 'linquot', 'both']
MODES = ['generic', 'chordal', 'cameron_walker', 'clique_corona']


@dataclasses.dataclass(frozen=True)
class Caps:
    """
    Hard limits of the exact algorithms. Exceeding one raises CapExceededError, results are never truncated.
    """
    max_vertices: int = MAX_VERTICES
    max_generators: int = MAX_GENERATORS
    max_faces: int = MAX_FACES
    max_order_search: int = MAX_ORDER_SEARCH
    max_subset_check: int = MAX_SUBSET_CHECK
    max_wpm_order_search: int = MAX_WPM_ORDER_SEARCH

    def __post_init__(self):
        for field in dataclasses.fields(self):
            value = getattr(self, field.name)
            if isinstance(value, bool) or not isinstance(value, int) or value < 1:
                raise ParseError('cap %s must be a positive integer, got %r' % (field.name, value))

    def replace(self, **kwargs):
        """
        :param kwargs:
            cap name and new value; None values are ignored
        :return: Caps
        """
        kwargs = {key: value for key, value in kwargs.items() if value is not None}
        unknown = [key for key in kwargs if key not in self.names()]
        if unknown:
            raise ParseError('unknown cap: %s' % ', '.join(sorted(unknown)))
        return dataclasses.replace(self, **kwargs)

    @staticmethod
    def names():
        return [field.name for field in dataclasses.fields(Caps)]

    @classmethod
    def parse(cls, text):
        """
        Parse caps given as JSON object ('{"max_vertices": 30}') or as 'key=value,key=value'
        :param text:
            str
        :return: Caps
        """
        text = text.strip()
        if not text:
            return cls()
        if text.startswith('{'):
            try:
                values = json.loads(text)
            except json.JSONDecodeError as err:
                raise ParseError('caps are not valid JSON: %s' % err) from err
            if not isinstance(values, dict):
                raise ParseError('caps JSON must be an object')
        else:
            values = {}
            for item in filter(None, [_item.strip() for _item in text.split(',')]):
                if '=' not in item:
                    raise ParseError('cap %r is not of the form key=value' % item)
                key, value = [_s.strip() for _s in item.split('=', 1)]
                try:
                    values[key] = int(value)
                except ValueError as err:
                    raise ParseError('cap %s is not an integer: %r' % (key, value)) from err
        return cls().replace(**values)

    @classmethod
    def from_env(cls, environ=None):
        """
        Caps from the HOMSHIFT_CAPS environment variable, defaults otherwise
        :param environ:
            mapping, default os.environ
        :return: Caps
        """
        if environ is None:
            environ = os.environ
        text = environ.get(CAPS_ENV)
        if text is None:
            return cls()
        logger.debug('caps read from %s: %s' % (CAPS_ENV, text))
        return cls.parse(text)


def resolve_caps(caps=None):
    """
    :param caps:
        Caps or None; None reads the environment
    :return: Caps
    """
    if caps is None:
        return Caps.from_env()
    return caps


@dataclasses.dataclass
class RunConfig:
    """
    Everything a CLI run needs. Unknown keys are rejected by from_dict.
    """
    command: str
    inputs: tuple = ()
    caps: Caps = dataclasses.field(default_factory=Caps.from_env)
    format: str = 'human'
    seed: int = DEFAULT_SEED
    jobs: int = 1
    route: str = 'both'
    k: int = None
    mode: str = 'generic'
    params: dict = dataclasses.field(default_factory=dict)

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ParseError('unknown command %r' % self.command)
        if self.format not in FORMATS:
            raise ParseError('unknown format %r, expected one of %s' % (self.format, ', '.join(FORMATS)))
        if self.route not in ROUTES:
            raise ParseError('unknown route %r, expected one of %s' % (self.route, ', '.join(ROUTES)))
        if self.mode not in MODES:
            raise ParseError('unknown mode %r, expected one of %s' % (self.mode, ', '.join(MODES)))
        if self.jobs < 1:
            raise ParseError('jobs must be positive')
        if self.k is not None and self.k < 0:
            raise ParseError('k must be non-negative')
        self.inputs = tuple(self.inputs)

    @classmethod
    def from_dict(cls, values):
        """
        :param values:
            dict, RunConfig fields; 'caps' may be a dict of cap values
        :return: RunConfig
        """
        names = [field.name for field in dataclasses.fields(cls)]
        unknown = [key for key in values if key not in names]
        if unknown:
            raise ParseError('unknown configuration key: %s' % ', '.join(sorted(unknown)))
        values = dict(values)
        if isinstance(values.get('caps'), dict):
            values['caps'] = Caps.from_env().replace(**values['caps'])
        return cls(**values)
