#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
#  uav_planner/config.py
#
#  Redistribution and use in source and binary forms, with or without
#  modification, are permitted provided that the following conditions are
#  met:
#
#  * Redistributions of source code must retain the above copyright
#    notice, this list of conditions and the following disclaimer.
#  * Redistributions in binary form must reproduce the above
#    copyright notice, this list of conditions and the following disclaimer
#    in the documentation and/or other materials provided with the
#    distribution.
#  * Neither the name of the project nor the names of its
#    contributors may be used to endorse or promote products derived from
#    this software without specific prior written permission.
#
#  THIS SOFTWARE IS PROVIDED BY THE COPYRIGHT HOLDERS AND CONTRIBUTORS
#  "AS IS" AND ANY EXPRESS OR IMPLIED WARRANTIES, INCLUDING, BUT NOT
#  LIMITED TO, THE IMPLIED WARRANTIES OF MERCHANTABILITY AND FITNESS FOR
#  A PARTICULAR PURPOSE ARE DISCLAIMED. IN NO EVENT SHALL THE COPYRIGHT
#  OWNER OR CONTRIBUTORS BE LIABLE FOR ANY DIRECT, INDIRECT, INCIDENTAL,
#  SPECIAL, EXEMPLARY, OR CONSEQUENTIAL DAMAGES (INCLUDING, BUT NOT
#  LIMITED TO, PROCUREMENT OF SUBSTITUTE GOODS OR SERVICES; LOSS OF USE,
#  DATA, OR PROFITS; OR BUSINESS INTERRUPTION) HOWEVER CAUSED AND ON ANY
#  THEORY OF LIABILITY, WHETHER IN CONTRACT, STRICT LIABILITY, OR TORT
#  (INCLUDING NEGLIGENCE OR OTHERWISE) ARISING IN ANY WAY OUT OF THE USE
#  OF THIS SOFTWARE, EVEN IF ADVISED OF THE POSSIBILITY OF SUCH DAMAGE.
#

"""
Reading and schema validation of the JSON scenario file. The result of :py:func:`read_config` is a plain mapping of
section names to mappings of validated values with defaults applied; the domain objects are built from it by
:py:func:`uav_planner.scenario.load_scenario`.
"""

import copy
import json
import logging

from . import errors
from . import types
from .suggestions import suggest_key

__all__ = ('CRITERIA', 'SCHEMA', 'read_config', 'validate_config')

logger = logging.getLogger(__name__)

CRITERIA = ('pf', 'sumrate', 'fivepse')
"""The network objectives a trajectory can be optimized for."""

ENVIRONMENTS = ('suburban',)

class Field(types.ValueObject):
	"""A configuration key, described by its kind from :py:data:`_KINDS` and the default applied when it is absent."""
	__slots__ = ('kind', 'default')
	def __init__(self, kind, default):
		self.kind = kind
		self.default = default

# kinds map to a predicate and a description used in error messages
_KINDS = {
	'bool': (lambda value: isinstance(value, bool), 'a boolean'),
	'count': (lambda value: types.is_natural_number(value) and value >= 1, 'a whole number >= 1'),
	'natural': (types.is_natural_number, 'a whole number >= 0'),
	'point': (types.is_point, 'a point [x, y]'),
	'real': (types.is_real_number, 'a finite number'),
	'positive': (types.is_positive_number, 'a number > 0'),
	'non_negative': (lambda value: types.is_real_number(value) and value >= 0, 'a number >= 0'),
	'points': (lambda value: isinstance(value, list) and all(types.is_point(point) for point in value), 'a list of points'),
	'counts': (lambda value: isinstance(value, list) and len(value) > 0 and all(types.is_natural_number(v) and v >= 1 for v in value), 'a non-empty list of whole numbers >= 1'),
	'durations': (lambda value: isinstance(value, list) and len(value) > 0 and all(types.is_real_number(v) and v >= 0 for v in value), 'a non-empty list of numbers >= 0'),
	'naturals': (lambda value: isinstance(value, list) and len(value) > 0 and all(types.is_natural_number(v) for v in value), 'a non-empty list of whole numbers >= 0'),
	'criteria': (lambda value: isinstance(value, list) and len(value) > 0 and all(v in CRITERIA for v in value), 'a non-empty list drawn from ' + ', '.join(CRITERIA)),
	'environment': (lambda value: value in ENVIRONMENTS, 'one of ' + ', '.join(ENVIRONMENTS)),
}

SCHEMA = {
	'area': {
		'width_m': Field('positive', 1000.0),
		'height_m': Field('positive', 1000.0),
	},
	'grid': {
		'step_m': Field('positive', 100.0),
		'origin': Field('point', [0.0, 0.0]),
	},
	'network': {
		'seed': Field('natural', 42),
		'n_mbs': Field('count', 4),
		'n_ue': Field('count', 100),
		'mbs_positions': Field('points', None),
		'ue_positions': Field('points', None),
	},
	'radio': {
		'fc_mhz': Field('positive', 1500.0),
		'p_mbs_dbm': Field('real', 46.0),
		'p_uav_dbm': Field('real', 30.0),
		'mbs_height_m': Field('positive', 30.0),
		'ue_height_m': Field('positive', 2.0),
		'uav_height_m': Field('positive', 120.0),
		'environment': Field('environment', 'suburban'),
		'd_min_km': Field('positive', 0.01),
		'sir_cap': Field('positive', 1e10),
		'force_frequency': Field('bool', False),
	},
	'mission': {
		'start': Field('point', [0.0, 0.0]),
		'dest': Field('point', [1000.0, 1000.0]),
		'total_time_s': Field('non_negative', 240.0),
		'delta_s': Field('positive', 8.0),
		'v_max_mps': Field('positive', 17.7),
	},
	'sweep': {
		'seeds': Field('count', 20),
		'seed_list': Field('naturals', None),
		'base_seed': Field('natural', 0),
		'n_mbs': Field('counts', [4, 5, 6]),
		'n_ue': Field('count', 100),
		'mission_times_s': Field('durations', [160.0, 200.0, 240.0, 280.0, 320.0, 360.0]),
		'criteria': Field('criteria', list(CRITERIA)),
		'threshold_bps_hz': Field('positive', 0.05),
		'smooth': Field('bool', True),
		'samples_per_interval': Field('count', 10),
		'smooth_tolerance': Field('positive', 0.10),
	},
}
"""The configuration schema, a mapping of section names to mappings of key names to :py:class:`Field` definitions."""

_OPTIONAL_SECTIONS = ('sweep',)

def _validate_section(name, raw):
	schema = SCHEMA[name]
	if not isinstance(raw, dict):
		raise errors.SchemaError('section must be an object', name)
	for key in raw:
		if key not in schema:
			raise errors.SchemaError(
				"unknown key {0!r}".format(key),
				name + '.' + key,
				suggestion=suggest_key(key, schema.keys())
			)
	section = {}
	for key, field in schema.items():
		if key not in raw:
			section[key] = copy.deepcopy(field.default)
			continue
		value = raw[key]
		predicate, description = _KINDS[field.kind]
		if not predicate(value):
			raise errors.SchemaError("expected {0}, got {1!r}".format(description, value), name + '.' + key)
		section[key] = value
	return section

def validate_config(raw):
	"""
	Validate a configuration mapping against :py:data:`SCHEMA`, applying the default value of every key which is not
	present. Optional sections which are absent map to ``None``.

	:param dict raw: The decoded JSON document.
	:return: The validated configuration.
	:rtype: dict
	"""
	if not isinstance(raw, dict):
		raise errors.SchemaError('the configuration must be a JSON object', '<root>')
	for name in raw:
		if name not in SCHEMA:
			raise errors.SchemaError(
				"unknown section {0!r}".format(name),
				name,
				suggestion=suggest_key(name, SCHEMA.keys())
			)
	config = {}
	for name in SCHEMA:
		if name not in raw and name in _OPTIONAL_SECTIONS:
			config[name] = None
			continue
		config[name] = _validate_section(name, raw.get(name, {}))
	network = raw.get('network', {})
	explicit = [key for key in ('mbs_positions', 'ue_positions') if key in network]
	if explicit and len(explicit) != 2:
		raise errors.SchemaError('explicit networks require both mbs_positions and ue_positions', 'network')
	if explicit and ('n_mbs' in network or 'n_ue' in network):
		raise errors.SchemaError('explicit positions can not be combined with n_mbs or n_ue', 'network')
	sweep = raw.get('sweep') or {}
	if 'seeds' in sweep and 'seed_list' in sweep:
		raise errors.SchemaError('only one of seeds and seed_list may be specified', 'sweep')
	return config

def read_config(path):
	"""
	Read and validate the JSON configuration file at *path*.

	:param str path: The path to the configuration file.
	:return: The validated configuration.
	:rtype: dict
	"""
	try:
		with open(path, 'r') as file_h:
			text = file_h.read()
	except OSError as error:
		raise errors.ScenarioFileError("can not read configuration file: {0}".format(error.strerror or error), path) from None
	try:
		raw = json.loads(text)
	except ValueError as error:
		raise errors.ScenarioFileError("invalid JSON in configuration file: {0}".format(error), path) from None
	logger.debug("read configuration file %s", path)
	return validate_config(raw)
