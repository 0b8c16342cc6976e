#! /usr/bin/python3
# -*- coding: utf-8 -*-
"""
    tests for homshift.tools: caps, run configuration, errors and helpers
"""

import logging

import pytest

from homshift.tools import check_cap, isint
from homshift.tools.config import CAPS_ENV, DEFAULT_SEED, MAX_GENERATORS, Caps, RunConfig, resolve_caps
from homshift.tools.errors import CapExceededError, GraphError, HomShiftError, ParseError, PreconditionError, \
    UniverseError


def test_caps_defaults():
    caps = Caps()
    assert caps.max_generators == MAX_GENERATORS
    assert Caps.names() == ['max_vertices', 'max_generators', 'max_faces', 'max_order_search', 'max_subset_check',
                            'max_wpm_order_search']


def test_caps_parse():
    assert Caps.parse('max_generators=30, max_faces=100') == Caps(max_generators=30, max_faces=100)
    assert Caps.parse('{"max_vertices": 12}') == Caps(max_vertices=12)
    assert Caps.parse('  ') == Caps()


@pytest.mark.parametrize('text', ['max_nodes=3', 'max_vertices=0', 'max_vertices=ten', 'max_vertices',
                                  '{"max_vertices": 3', '[1, 2]', '{"max_faces": true}'])
def test_caps_parse_errors(text):
    with pytest.raises(ParseError):
        Caps.parse(text)


def test_caps_from_env():
    assert Caps.from_env({}) == Caps()
    assert Caps.from_env({CAPS_ENV: 'max_order_search=5'}).max_order_search == 5
    with pytest.raises(ParseError):
        Caps.from_env({CAPS_ENV: 'max_order_search=-5'})


def test_resolve_caps(monkeypatch):
    caps = Caps(max_faces=7)
    assert resolve_caps(caps) is caps
    monkeypatch.setenv(CAPS_ENV, 'max_faces=9')
    assert resolve_caps().max_faces == 9
    monkeypatch.delenv(CAPS_ENV)
    assert resolve_caps() == Caps()


def test_caps_replace():
    caps = Caps().replace(max_vertices=None, max_generators=4)
    assert caps.max_vertices == Caps().max_vertices
    assert caps.max_generators == 4
    with pytest.raises(ParseError):
        Caps().replace(max_colors=3)


def test_run_config():
    config = RunConfig(command='hs', inputs=['g.json'], k=1)
    assert config.inputs == ('g.json',)
    assert config.seed == DEFAULT_SEED
    assert config.format == 'human'
    assert config.route == 'both'


@pytest.mark.parametrize('values', [{'command': 'draw'}, {'command': 'hs', 'format': 'xml'},
                                    {'command': 'hs', 'route': 'fast'}, {'command': 'check', 'mode': 'planar'},
                                    {'command': 'suite', 'jobs': 0}, {'command': 'hs', 'k': -1},
                                    {'command': 'hs', 'colour': 'red'}])
def test_run_config_errors(values):
    with pytest.raises(ParseError):
        RunConfig.from_dict(values)


def test_run_config_from_dict(monkeypatch):
    monkeypatch.delenv(CAPS_ENV, raising=False)
    config = RunConfig.from_dict({'command': 'suite', 'caps': {'max_generators': 12}, 'jobs': 2, 'seed': 3})
    assert config.caps == Caps(max_generators=12)
    assert config.jobs == 2
    assert config.seed == 3


def test_error_hierarchy():
    for error in (GraphError, UniverseError, CapExceededError, PreconditionError, ParseError):
        assert issubclass(error, HomShiftError)
    assert issubclass(CapExceededError, RuntimeError)
    assert issubclass(ParseError, ValueError)
    assert not issubclass(CapExceededError, ValueError)


def test_check_cap(caplog):
    check_cap(3, 3, 'number of vertices')
    with pytest.raises(CapExceededError):
        check_cap(4, 3, 'number of vertices')
    with caplog.at_level(logging.WARNING, logger='homshift.tools'):
        check_cap(19, 20, 'number of generators')
    assert 'close to the cap' in caplog.text


def test_isint():
    assert isint(3)
    assert not isint(True)
    assert not isint(3.0)
