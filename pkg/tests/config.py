#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
#  tests/config.py
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

import copy
import os
import tempfile
import unittest

import uav_planner.config as config
import uav_planner.errors as errors

from ._utils import write_config

__all__ = ('ReadConfigTests', 'ValidateConfigTests')

class ValidateConfigTests(unittest.TestCase):
	def test_defaults_are_applied(self):
		validated = config.validate_config({})
		self.assertEqual(validated['area'], {'width_m': 1000.0, 'height_m': 1000.0})
		self.assertEqual(validated['grid']['step_m'], 100.0)
		self.assertEqual(validated['mission']['total_time_s'], 240.0)
		self.assertEqual(validated['mission']['delta_s'], 8.0)
		self.assertEqual(validated['mission']['v_max_mps'], 17.7)
		self.assertEqual(validated['radio']['fc_mhz'], 1500.0)
		self.assertEqual(validated['network']['n_ue'], 100)
		self.assertIsNone(validated['sweep'])

	def test_sweep_defaults(self):
		sweep = config.validate_config({'sweep': {}})['sweep']
		self.assertEqual(sweep['n_mbs'], [4, 5, 6])
		self.assertEqual(sweep['mission_times_s'], [160.0, 200.0, 240.0, 280.0, 320.0, 360.0])
		self.assertEqual(sweep['criteria'], ['pf', 'sumrate', 'fivepse'])
		self.assertEqual(sweep['threshold_bps_hz'], 0.05)

	def test_defaults_are_not_shared(self):
		validated = config.validate_config({'sweep': {}})
		validated['sweep']['criteria'].append('pf')
		self.assertEqual(config.SCHEMA['sweep']['criteria'].default, ['pf', 'sumrate', 'fivepse'])

	def test_unknown_section_has_a_suggestion(self):
		with self.assertRaises(errors.SchemaError) as context:
			config.validate_config({'mision': {}})
		self.assertEqual(context.exception.field, 'mision')
		self.assertEqual(context.exception.suggestion, 'mission')

	def test_unknown_key_has_a_suggestion(self):
		with self.assertRaises(errors.SchemaError) as context:
			config.validate_config({'mission': {'delta': 8}})
		self.assertEqual(context.exception.field, 'mission.delta')
		self.assertEqual(context.exception.suggestion, 'delta_s')

	def test_wrong_kinds_are_rejected(self):
		for section, key, value in (
				('network', 'n_ue', True),
				('network', 'n_mbs', 0),
				('mission', 'start', [0]),
				('mission', 'delta_s', -8),
				('radio', 'p_mbs_dbm', 'loud'),
				('radio', 'environment', 'urban'),
				('sweep', 'criteria', ['pf', 'maxmin']),
				('sweep', 'mission_times_s', [])):
			with self.assertRaises(errors.SchemaError, msg="{0}.{1}={2!r}".format(section, key, value)) as context:
				config.validate_config({section: {key: value}})
			self.assertEqual(context.exception.field, section + '.' + key)

	def test_root_must_be_an_object(self):
		with self.assertRaises(errors.SchemaError):
			config.validate_config([])

	def test_explicit_positions(self):
		network = {'mbs_positions': [[0, 0]], 'ue_positions': [[1, 1], [2, 2]]}
		validated = config.validate_config({'network': copy.deepcopy(network)})
		self.assertEqual(validated['network']['ue_positions'], [[1, 1], [2, 2]])
		with self.assertRaises(errors.SchemaError):
			config.validate_config({'network': {'mbs_positions': [[0, 0]]}})
		with self.assertRaises(errors.SchemaError):
			config.validate_config({'network': dict(network, n_ue=2)})

	def test_seeds_are_exclusive(self):
		with self.assertRaises(errors.SchemaError) as context:
			config.validate_config({'sweep': {'seeds': 2, 'seed_list': [1, 2]}})
		self.assertEqual(context.exception.field, 'sweep')

class ReadConfigTests(unittest.TestCase):
	def test_read_config(self):
		with tempfile.TemporaryDirectory() as directory:
			path = write_config(directory, {'mission': {'total_time_s': 160}})
			self.assertEqual(config.read_config(path)['mission']['total_time_s'], 160)

	def test_missing_file(self):
		with tempfile.TemporaryDirectory() as directory:
			path = os.path.join(directory, 'missing.json')
			with self.assertRaises(errors.ScenarioFileError) as context:
				config.read_config(path)
		self.assertEqual(context.exception.path, path)

	def test_invalid_json(self):
		with tempfile.TemporaryDirectory() as directory:
			path = os.path.join(directory, 'broken.json')
			with open(path, 'w') as file_h:
				file_h.write('{"area": ')
			with self.assertRaises(errors.ScenarioFileError):
				config.read_config(path)

if __name__ == '__main__':
	unittest.main()
