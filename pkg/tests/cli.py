#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
#  tests/cli.py
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

import contextlib
import io
import json
import os
import tempfile
import unittest
import unittest.mock as mock

import uav_planner.cli as cli
import uav_planner.errors as errors
import uav_planner.evaluation as evaluation
import uav_planner.planner as planner
import uav_planner.radio as radio
import uav_planner.scenario as scenario

from ._utils import small_config, write_config

import pandas as pd

__all__ = ('HeatmapCommandTests', 'MainTests', 'PlanCommandTests', 'SweepCommandTests')

def run_main(*argv):
	stderr = io.StringIO()
	with contextlib.redirect_stderr(stderr):
		status = cli.main(list(argv))
	return status, stderr.getvalue()

class _CommandTestCase(unittest.TestCase):
	def setUp(self):
		self._directory = tempfile.TemporaryDirectory()
		self.directory = self._directory.name
		self.out_dir = os.path.join(self.directory, 'out')

	def tearDown(self):
		self._directory.cleanup()

	def config(self, config):
		return write_config(self.directory, config)

	def read_manifest(self):
		with open(os.path.join(self.out_dir, 'manifest.json'), 'r') as file_h:
			return json.load(file_h)

class HeatmapCommandTests(_CommandTestCase):
	def test_default_configuration(self):
		status, _ = run_main('heatmap', '--config', self.config({}), '--out', self.out_dir, '--criterion', 'sumrate')
		self.assertEqual(status, cli.EXIT_SUCCESS)
		frame = pd.read_csv(os.path.join(self.out_dir, 'reward_map_sumrate.csv'))
		self.assertEqual(len(frame), 121)
		sir = pd.read_csv(os.path.join(self.out_dir, 'sir_heatmap.csv'))
		self.assertEqual(len(sir), 121)
		manifest = self.read_manifest()
		self.assertEqual(manifest['command'], 'heatmap')
		self.assertEqual(manifest['seeds'], [42])
		self.assertEqual(sorted(manifest['outputs']), ['reward_map_sumrate.csv', 'sir_heatmap.csv'])

	def test_small_grid(self):
		outputs = cli.cmd_heatmap(self.config(small_config()), 'pf', self.out_dir)
		frame = pd.read_csv(outputs[0])
		self.assertEqual(len(frame), 9)
		self.assertEqual(sorted(frame['x_m'].unique()), [0.0, 100.0, 200.0])

class PlanCommandTests(_CommandTestCase):
	def test_plan_default_configuration(self):
		status, _ = run_main('plan', '--config', self.config({}), '--out', self.out_dir, '--criterion', 'pf', '--smooth')
		self.assertEqual(status, cli.EXIT_SUCCESS)
		frame = pd.read_csv(os.path.join(self.out_dir, 'trajectory_pf.csv'))
		self.assertEqual(len(frame), 31)
		self.assertEqual((frame['x_m'].iloc[0], frame['y_m'].iloc[0]), (0.0, 0.0))
		self.assertEqual((frame['x_m'].iloc[-1], frame['y_m'].iloc[-1]), (1000.0, 1000.0))
		smooth = pd.read_csv(os.path.join(self.out_dir, 'smooth_pf.csv'))
		self.assertEqual(len(smooth), 301)
		with open(os.path.join(self.out_dir, 'metrics_pf.json'), 'r') as file_h:
			metrics = json.load(file_h)
		self.assertEqual(metrics['n_steps'], 30)
		self.assertEqual(metrics['minimum_steps'], 10)
		self.assertLessEqual(metrics['smooth']['max_ground_speed_mps'], 17.7 + 1e-6)
		self.assertAlmostEqual(metrics['total_reward'], sum(frame['stage_reward'].iloc[:-1]), places=6)
		self.assertEqual(self.read_manifest()['command'], 'plan')

	def test_plan_matches_the_library(self):
		path = self.config(small_config())
		cli.cmd_plan(path, 'sumrate', self.out_dir)
		scn = scenario.load_scenario(path)
		net = scn.realize()
		traj = planner.plan(radio.reward_map(net, scn.grid, 'sumrate'), scn.mission)
		frame = pd.read_csv(os.path.join(self.out_dir, 'trajectory_sumrate.csv'))
		self.assertEqual(frame[['x_m', 'y_m']].values.tolist(), traj.waypoints.tolist())
		with open(os.path.join(self.out_dir, 'metrics_sumrate.json'), 'r') as file_h:
			metrics = json.load(file_h)
		expected = evaluation.evaluate_discrete(net, traj)
		self.assertAlmostEqual(metrics['discrete']['per_ue_capacity'], expected.per_ue_capacity, places=12)

	def test_zero_step_mission(self):
		config = small_config(mission={'start': [100, 100], 'dest': [100, 100], 'total_time_s': 0})
		status, _ = run_main('plan', '--config', self.config(config), '--out', self.out_dir, '--smooth')
		self.assertEqual(status, cli.EXIT_SUCCESS)
		frame = pd.read_csv(os.path.join(self.out_dir, 'trajectory_pf.csv'))
		self.assertEqual(len(frame), 1)
		self.assertFalse(os.path.exists(os.path.join(self.out_dir, 'smooth_pf.csv')))

	def test_infeasible_mission(self):
		status, stderr = run_main('plan', '--config', self.config({'mission': {'total_time_s': 8}}), '--out', self.out_dir)
		self.assertEqual(status, cli.EXIT_INFEASIBLE)
		self.assertIn('InfeasibleMissionError', stderr)
		self.assertFalse(os.path.exists(self.out_dir))

	def test_populated_output_directory(self):
		os.makedirs(self.out_dir)
		with open(os.path.join(self.out_dir, 'keep.txt'), 'w') as file_h:
			file_h.write('keep\n')
		path = self.config(small_config())
		status, _ = run_main('plan', '--config', path, '--out', self.out_dir)
		self.assertEqual(status, cli.EXIT_IO)
		status, _ = run_main('plan', '--config', path, '--out', self.out_dir, '--force')
		self.assertEqual(status, cli.EXIT_SUCCESS)
		self.assertTrue(os.path.isfile(os.path.join(self.out_dir, 'keep.txt')))

class SweepCommandTests(_CommandTestCase):
	def test_sweep(self):
		config = small_config(sweep={'seeds': 2, 'n_mbs': [2], 'n_ue': 20, 'mission_times_s': [32], 'criteria': ['pf']})
		status, _ = run_main('sweep', '--config', self.config(config), '--out', self.out_dir, '--workers', '1')
		self.assertEqual(status, cli.EXIT_SUCCESS)
		frame = pd.read_csv(os.path.join(self.out_dir, 'sweep.csv'))
		self.assertEqual(list(frame['kind']), ['run', 'run', 'mean', 'std'])
		scn = scenario.load_scenario(os.path.join(self.directory, 'config.json'))
		for seed in (0, 1):
			net = scenario.generate_network(seed, 2, 20, scn.area, scn.radio)
			traj = planner.plan(radio.reward_map(net, scn.grid, 'pf'), scn.mission)
			row = frame[(frame['kind'] == 'run') & (frame['seed'] == seed)].iloc[0]
			self.assertAlmostEqual(row['per_ue_capacity'], evaluation.evaluate_discrete(net, traj).per_ue_capacity, places=12)
		with open(os.path.join(self.out_dir, 'summary.json'), 'r') as file_h:
			summary = json.load(file_h)
		self.assertEqual(summary['seeds'], [0, 1])
		self.assertEqual(len(summary['cells']), 1)
		self.assertEqual(self.read_manifest()['seeds'], [0, 1])

	def test_sweep_requires_a_section(self):
		status, stderr = run_main('sweep', '--config', self.config(small_config()), '--out', self.out_dir)
		self.assertEqual(status, cli.EXIT_CONFIGURATION)
		self.assertIn('SchemaError', stderr)

	def test_invalid_worker_count(self):
		config = small_config(sweep={'seeds': 1, 'n_mbs': [2], 'mission_times_s': [32]})
		status, _ = run_main('sweep', '--config', self.config(config), '--out', self.out_dir, '--workers', '0')
		self.assertEqual(status, cli.EXIT_CONFIGURATION)

	def test_invalid_worker_environment_variable(self):
		config = small_config(sweep={'seeds': 1, 'n_mbs': [2], 'mission_times_s': [32]})
		with mock.patch.dict(os.environ, {cli.WORKERS_ENVIRONMENT_VARIABLE: 'many'}):
			status, stderr = run_main('sweep', '--config', self.config(config), '--out', self.out_dir)
		self.assertEqual(status, cli.EXIT_CONFIGURATION)
		self.assertIn("(got 'many')", stderr)
		self.assertFalse(os.path.exists(os.path.join(self.out_dir, 'sweep.csv')))

	def test_worker_count(self):
		with mock.patch.dict(os.environ, {cli.WORKERS_ENVIRONMENT_VARIABLE: '3'}):
			self.assertEqual(cli._worker_count(None), 3)
			self.assertEqual(cli._worker_count(2), 2)
		with mock.patch.dict(os.environ, clear=True):
			self.assertEqual(cli._worker_count(None), 1)
		for value in ('2.5', '', -1):
			with self.assertRaises(errors.InvariantError) as context:
				cli._worker_count(value)
			self.assertIn("(got {0!r})".format(value), context.exception.message)
			self.assertEqual(context.exception.field, 'workers')

	def test_sweep_with_a_zero_duration(self):
		config = small_config(sweep={'seeds': 1, 'n_mbs': [2], 'mission_times_s': [0, 32], 'criteria': ['pf']})
		status, _ = run_main('sweep', '--config', self.config(config), '--out', self.out_dir, '--workers', '1')
		self.assertEqual(status, cli.EXIT_SUCCESS)
		frame = pd.read_csv(os.path.join(self.out_dir, 'sweep.csv'))
		runs = frame[frame['kind'] == 'run']
		self.assertEqual(list(runs['feasible'].astype(str)), ['False', 'True'])

class MainTests(_CommandTestCase):
	def test_missing_config_argument(self):
		with contextlib.redirect_stderr(io.StringIO()):
			with self.assertRaises(SystemExit) as context:
				cli.main(['plan', '--out', self.out_dir])
		self.assertEqual(context.exception.code, 2)

	def test_missing_config_file(self):
		status, stderr = run_main('heatmap', '--config', os.path.join(self.directory, 'missing.json'), '--out', self.out_dir)
		self.assertEqual(status, cli.EXIT_CONFIGURATION)
		self.assertIn('ScenarioFileError', stderr)

	def test_unknown_key_suggestion(self):
		status, stderr = run_main('heatmap', '--config', self.config({'mission': {'total_tme_s': 10}}), '--out', self.out_dir)
		self.assertEqual(status, cli.EXIT_CONFIGURATION)
		self.assertIn("Did you mean 'total_time_s'?", stderr)

if __name__ == '__main__':
	unittest.main()
